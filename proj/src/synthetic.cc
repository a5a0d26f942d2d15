//
// Copyright 2026 The Genderation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "genderation/synthetic.h"

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace genderation {
namespace {

struct CharacterTemplate {
  std::string_view name;
  GenderLabel label;
  std::string_view persona;
  int weight;
};

constexpr std::array kCharacters = {
    CharacterTemplate{"king", GenderLabel::kMale,
                      "I am the king of this land. My father ruled before me "
                      "and his father before him.",
                      3},
    CharacterTemplate{"knight", GenderLabel::kMale,
                      "I am a knight sworn to the king. I guard the castle "
                      "gates with my brothers in arms.",
                      3},
    CharacterTemplate{"blacksmith", GenderLabel::kMale,
                      "I am the village blacksmith. My father taught me to "
                      "work iron when I was a boy.",
                      2},
    CharacterTemplate{"prince", GenderLabel::kMale,
                      "I am the king's son. One day I will rule like my "
                      "father.",
                      2},
    CharacterTemplate{"wizard", GenderLabel::kMale,
                      "I am an old wizard who lives in a tower. The king "
                      "asks me for advice.",
                      2},
    CharacterTemplate{"monk", GenderLabel::kMale,
                      "I pray in the abbey every morning. The abbot is a "
                      "wise man.",
                      1},
    CharacterTemplate{"queen", GenderLabel::kFemale,
                      "I am the queen. I am the king's wife and I sit "
                      "beside him at court.",
                      2},
    CharacterTemplate{"maid", GenderLabel::kFemale,
                      "I clean the rooms of the castle. My husband works in "
                      "the stables for the lord.",
                      2},
    CharacterTemplate{"priestess", GenderLabel::kFemale,
                      "I tend the temple fire. My mother was a priestess "
                      "before me.",
                      1},
    CharacterTemplate{"witch", GenderLabel::kFemale,
                      "I brew potions in the swamp. The villagers fear me "
                      "but buy my cures.",
                      1},
    CharacterTemplate{"merchant", GenderLabel::kNeutral,
                      "I sell silk and spices from distant lands. I always "
                      "count my coins twice.",
                      3},
    CharacterTemplate{"innkeeper", GenderLabel::kNeutral,
                      "I run the tavern by the crossroads. Travellers bring "
                      "me news.",
                      3},
    CharacterTemplate{"owl", GenderLabel::kNeutral,
                      "I watch the forest at night. I know every path "
                      "between the trees.",
                      2},
    CharacterTemplate{"ghost", GenderLabel::kNeutral,
                      "I wander the old graveyard. I cannot remember how I "
                      "died.",
                      2},
    CharacterTemplate{"traveller", GenderLabel::kNeutral,
                      "I walk from town to town. I have seen the sea and "
                      "the mountains.",
                      3},
    CharacterTemplate{"healer", GenderLabel::kNeutral,
                      "I gather herbs in the meadow and mend broken bones.",
                      2},
    CharacterTemplate{"bard", GenderLabel::kNeutral,
                      "I sing songs in the tavern for a warm meal. Crème "
                      "brûlée is my favourite treat.",
                      2},
    CharacterTemplate{"farmer", GenderLabel::kNeutral,
                      "I grow wheat and barley. The harvest was poor this "
                      "year.",
                      3},
    CharacterTemplate{"hunter", GenderLabel::kUnknown,
                      "I track deer in the woods and sell the hides at the "
                      "market.",
                      1},
};

constexpr std::array<std::string_view, 10> kNouns = {
    "sword", "bread", "map", "lantern", "cart",
    "horse", "book",  "key", "cloak",   "barrel"};
constexpr std::array<std::string_view, 8> kPlaces = {
    "tavern", "forest", "market", "castle", "river", "village", "tower",
    "harbor"};
constexpr std::array<std::string_view, 6> kAdjectives = {
    "quiet", "crowded", "cold", "dark", "busy", "peaceful"};
constexpr std::array<std::string_view, 6> kVerbs = {
    "fix", "find", "carry", "clean", "sell", "guard"};
constexpr std::array<std::string_view, 5> kRoles = {
    "farmer", "soldier", "baker", "sailor", "merchant"};

// Templates use {n} noun, {p} place, {a} adjective, {v} verb, {r} role.
struct TurnTemplate {
  std::string_view text;
  int weight;
};

constexpr std::array kNeutralTurns = {
    TurnTemplate{"What a great day for more money.", 2},
    TurnTemplate{"The {p} is very {a} today.", 3},
    TurnTemplate{"I have to {v} the {n} before nightfall.", 3},
    TurnTemplate{"Do you know the way to the {p}?", 3},
    TurnTemplate{"I am sorry to hear that.", 2},
    TurnTemplate{"Thank you for your help, friend.", 2},
    TurnTemplate{"Would you like to buy a {n}?", 3},
    TurnTemplate{"I will {v} the {n} for you.", 3},
    TurnTemplate{"Yes, I can help you with that.", 2},
    TurnTemplate{"No, I don't remember.", 2},
    TurnTemplate{"The road to the {p} is long and {a}.", 3},
    TurnTemplate{"Have you seen my {n} anywhere?", 3},
    TurnTemplate{"It is fine, I can set my booth up here.", 1},
};

// Mirror images of each other: every male template has a female twin.
constexpr std::array kMaleTurns = {
    TurnTemplate{"Yes my lord.", 9},
    TurnTemplate{"The king wants to see you in the {p}.", 3},
    TurnTemplate{"My father was a {r} in the {p}.", 3},
    TurnTemplate{"He is a good {r}.", 3},
    TurnTemplate{"His {n} is in the {p}.", 2},
    TurnTemplate{"My brother will {v} the {n}.", 2},
    TurnTemplate{"Sir, the {p} is {a} tonight.", 2},
    TurnTemplate{"I heard the prince lost his {n}.", 2},
};

constexpr std::array kFemaleTurns = {
    TurnTemplate{"Yes my lady.", 9},
    TurnTemplate{"The queen wants to see you in the {p}.", 3},
    TurnTemplate{"My mother was a {r} in the {p}.", 3},
    TurnTemplate{"She is a good {r}.", 3},
    TurnTemplate{"Her {n} is in the {p}.", 2},
    TurnTemplate{"My sister will {v} the {n}.", 2},
    TurnTemplate{"Madam, the {p} is {a} tonight.", 2},
    TurnTemplate{"I heard the princess lost her {n}.", 2},
};

constexpr std::array kMixedTurns = {
    TurnTemplate{"The king and the queen are in the {p}.", 3},
    TurnTemplate{"My mother and father live by the {p}.", 3},
    TurnTemplate{"He told her about the {n}.", 2},
    TurnTemplate{"The queen's son guards the {p}.", 2},
};

// Share of turns per category in percent: neutral, male-only, female-only,
// both.
constexpr std::array<int, 4> kCategoryWeights = {60, 30, 6, 4};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t Below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  template <typename Range>
  std::size_t Weighted(const Range& items) {
    int total = 0;
    for (const auto& item : items) total += Weight(item);
    auto roll = static_cast<int>(Below(static_cast<std::size_t>(total)));
    std::size_t i = 0;
    for (const auto& item : items) {
      roll -= Weight(item);
      if (roll < 0) return i;
      ++i;
    }
    return i - 1;
  }

 private:
  static int Weight(int w) { return w; }
  static int Weight(const CharacterTemplate& c) { return c.weight; }
  static int Weight(const TurnTemplate& t) { return t.weight; }

  std::mt19937_64 rng_;
};

template <std::size_t N>
std::string_view Pick(Sampler& s, const std::array<std::string_view, N>& xs) {
  return xs[s.Below(N)];
}

std::string Fill(std::string_view pattern, Sampler& s) {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == '{' && i + 2 < pattern.size() && pattern[i + 2] == '}') {
      switch (pattern[i + 1]) {
        case 'n':
          out += Pick(s, kNouns);
          break;
        case 'p':
          out += Pick(s, kPlaces);
          break;
        case 'a':
          out += Pick(s, kAdjectives);
          break;
        case 'v':
          out += Pick(s, kVerbs);
          break;
        case 'r':
          out += Pick(s, kRoles);
          break;
        default:
          out += pattern.substr(i, 3);
      }
      i += 2;
      continue;
    }
    out += pattern[i];
  }
  return out;
}

template <typename Range>
std::string Turn(const Range& templates, Sampler& s) {
  return Fill(templates[s.Weighted(templates)].text, s);
}

}  // namespace

DialogueCorpus make_synthetic_corpus(std::uint64_t seed,
                                     std::size_t dialogues) {
  Sampler s(seed);
  DialogueCorpus corpus;
  const std::size_t train_end = dialogues * 8 / 10;
  const std::size_t valid_end = dialogues * 9 / 10;
  for (std::size_t d = 0; d < dialogues; ++d) {
    Dialogue dialogue;
    char id[32];
    std::snprintf(id, sizeof(id), "synth-%04zu", d);
    dialogue.id = id;
    dialogue.split = d < train_end ? "train" : d < valid_end ? "valid" : "test";

    const std::size_t first = s.Weighted(kCharacters);
    std::size_t second = s.Weighted(kCharacters);
    while (second == first) second = s.Weighted(kCharacters);
    for (std::size_t c : {first, second}) {
      const CharacterTemplate& t = kCharacters[c];
      dialogue.characters.push_back(
          Character{std::string(t.name), std::string(t.persona), t.label});
    }

    const std::size_t turns = 4 + s.Below(5);
    for (std::size_t t = 0; t < turns; ++t) {
      std::string text;
      switch (s.Weighted(kCategoryWeights)) {
        case 0:
          text = Turn(kNeutralTurns, s);
          break;
        case 1:
          text = Turn(kMaleTurns, s);
          break;
        case 2:
          text = Turn(kFemaleTurns, s);
          break;
        default:
          text = Turn(kMixedTurns, s);
          break;
      }
      dialogue.turns.push_back(Utterance{t % 2, std::move(text)});
    }
    corpus.add(std::move(dialogue));
  }
  return corpus;
}

}  // namespace genderation
