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

#include "genderation/corpus.h"

#include <cstdint>

#include <json.hpp>

#include "genderation/errors.h"
#include "genderation/io.h"
#include "genderation/text.h"

namespace genderation {

using ordered_json = nlohmann::ordered_json;

std::string_view to_code(GenderLabel label) {
  switch (label) {
    case GenderLabel::kFemale:
      return "F";
    case GenderLabel::kMale:
      return "M";
    case GenderLabel::kNeutral:
      return "N";
    case GenderLabel::kUnknown:
      break;
  }
  return "U";
}

std::optional<GenderLabel> parse_gender_label(std::string_view code) {
  if (code == "F") return GenderLabel::kFemale;
  if (code == "M") return GenderLabel::kMale;
  if (code == "N") return GenderLabel::kNeutral;
  if (code == "U") return GenderLabel::kUnknown;
  return std::nullopt;
}

void validate(const Dialogue& dialogue) {
  if (dialogue.id.empty()) throw ValidationError("dialogue id is empty");
  const std::string where = "dialogue '" + dialogue.id + "': ";
  if (dialogue.characters.empty()) {
    throw ValidationError(where + "needs at least one character");
  }
  for (std::size_t i = 0; i < dialogue.characters.size(); ++i) {
    if (trim(dialogue.characters[i].name).empty()) {
      throw ValidationError(where + "character " + std::to_string(i) +
                            " has an empty name");
    }
  }
  for (std::size_t i = 0; i < dialogue.turns.size(); ++i) {
    const Utterance& turn = dialogue.turns[i];
    if (turn.speaker_index >= dialogue.characters.size()) {
      throw ValidationError(where + "turn " + std::to_string(i) +
                            " has speaker_index " +
                            std::to_string(turn.speaker_index) + " but only " +
                            std::to_string(dialogue.characters.size()) +
                            " characters");
    }
    if (trim(turn.text).empty()) {
      throw ValidationError(where + "turn " + std::to_string(i) +
                            " has empty text");
    }
  }
}

void DialogueCorpus::add(Dialogue dialogue) {
  validate(dialogue);
  if (ids_.contains(dialogue.id)) {
    throw ValidationError("duplicate dialogue id '" + dialogue.id + "'");
  }
  ids_.insert(dialogue.id);
  dialogues_.push_back(std::move(dialogue));
}

bool DialogueCorpus::contains(std::string_view id) const {
  return ids_.find(id) != ids_.end();
}

namespace {

const ordered_json& Field(const ordered_json& object, const char* key,
                          ordered_json::value_t type, const char* type_name) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  const bool ok = it->type() == type ||
                  (type == ordered_json::value_t::number_unsigned &&
                   it->is_number_integer() && it->get<std::int64_t>() >= 0);
  if (!ok) {
    throw ValidationError(std::string("field \"") + key + "\" must be " +
                          type_name);
  }
  return *it;
}

Dialogue DialogueFromJson(const ordered_json& j) {
  using value_t = ordered_json::value_t;
  if (!j.is_object()) throw ValidationError("line is not a JSON object");
  Dialogue d;
  d.id = Field(j, "id", value_t::string, "a string").get<std::string>();
  if (auto it = j.find("split"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw ValidationError("field \"split\" must be a string");
    d.split = it->get<std::string>();
  }
  for (const auto& c : Field(j, "characters", value_t::array, "an array")) {
    if (!c.is_object()) throw ValidationError("character is not an object");
    Character ch;
    ch.name = Field(c, "name", value_t::string, "a string").get<std::string>();
    ch.persona =
        Field(c, "persona", value_t::string, "a string").get<std::string>();
    const auto code =
        Field(c, "gender_label", value_t::string, "a string").get<std::string>();
    const auto label = parse_gender_label(code);
    if (!label) {
      throw ValidationError("gender_label must be F, M, N or U, got \"" + code +
                            "\"");
    }
    ch.gender_label = *label;
    d.characters.push_back(std::move(ch));
  }
  for (const auto& t : Field(j, "turns", value_t::array, "an array")) {
    if (!t.is_object()) throw ValidationError("turn is not an object");
    Utterance u;
    u.speaker_index = Field(t, "speaker_index", value_t::number_unsigned,
                            "a non-negative integer")
                          .get<std::size_t>();
    u.text = Field(t, "text", value_t::string, "a string").get<std::string>();
    d.turns.push_back(std::move(u));
  }
  return d;
}

ordered_json DialogueToJson(const Dialogue& d) {
  ordered_json j;
  j["id"] = d.id;
  if (d.split) j["split"] = *d.split;
  j["characters"] = ordered_json::array();
  for (const Character& c : d.characters) {
    j["characters"].push_back({{"name", c.name},
                               {"persona", c.persona},
                               {"gender_label", to_code(c.gender_label)}});
  }
  j["turns"] = ordered_json::array();
  for (const Utterance& u : d.turns) {
    j["turns"].push_back({{"speaker_index", u.speaker_index}, {"text", u.text}});
  }
  return j;
}

}  // namespace

DialogueCorpus parse_corpus(std::string_view jsonl, const std::string& origin) {
  DialogueCorpus corpus;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start < jsonl.size()) {
    std::size_t end = jsonl.find('\n', start);
    if (end == std::string_view::npos) end = jsonl.size();
    const std::string_view text = jsonl.substr(start, end - start);
    start = end + 1;
    ++line;
    if (trim(text).empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(origin, line, e.what());
    }
    try {
      corpus.add(DialogueFromJson(j));
    } catch (const ParseError&) {
      throw;
    } catch (const ValidationError& e) {
      throw ParseError(origin, line, e.what());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(origin, line, e.what());
    }
  }
  return corpus;
}

DialogueCorpus load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path), path.string());
}

std::string serialize_corpus(const DialogueCorpus& corpus) {
  std::string out;
  for (const Dialogue& d : corpus) {
    out += DialogueToJson(d).dump();
    out += '\n';
  }
  return out;
}

void write_corpus(const DialogueCorpus& corpus,
                  const std::filesystem::path& path) {
  write_file(path, serialize_corpus(corpus));
}

DialogueCorpus filter_split(const DialogueCorpus& corpus,
                            std::string_view split) {
  DialogueCorpus out;
  for (const Dialogue& d : corpus) {
    if (d.split && *d.split == split) out.add(d);
  }
  return out;
}

std::size_t token_count(const Dialogue& dialogue) {
  std::size_t total = 0;
  for (const Utterance& u : dialogue.turns) total += tokenize(u.text).size();
  return total;
}

std::size_t token_count(const DialogueCorpus& corpus) {
  std::size_t total = 0;
  for (const Dialogue& d : corpus) total += token_count(d);
  return total;
}

}  // namespace genderation
