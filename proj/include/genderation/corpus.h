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

#ifndef GENDERATION_CORPUS_H_
#define GENDERATION_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace genderation {

// Human-annotated character gender. kNeutral means annotated as not
// explicit; kUnknown means never annotated.
enum class GenderLabel { kFemale = 0, kMale = 1, kNeutral = 2, kUnknown = 3 };

inline constexpr std::size_t kGenderLabelCount = 4;

std::string_view to_code(GenderLabel label);  // "F", "M", "N", "U"
std::optional<GenderLabel> parse_gender_label(std::string_view code);

struct Character {
  std::string name;
  std::string persona;
  GenderLabel gender_label = GenderLabel::kUnknown;

  bool operator==(const Character&) const = default;
};

struct Utterance {
  std::size_t speaker_index = 0;
  std::string text;

  bool operator==(const Utterance&) const = default;
};

struct Dialogue {
  std::string id;
  // Optional corpus split tag ("train", "valid", "test", ...).
  std::optional<std::string> split;
  std::vector<Character> characters;
  std::vector<Utterance> turns;

  bool operator==(const Dialogue&) const = default;
};

// Throws ValidationError describing the first broken invariant.
void validate(const Dialogue& dialogue);

// Ordered dialogues with unique ids.
class DialogueCorpus {
 public:
  DialogueCorpus() = default;

  // Validates and appends. Throws ValidationError on a broken invariant or
  // duplicate id.
  void add(Dialogue dialogue);
  bool contains(std::string_view id) const;

  const std::vector<Dialogue>& dialogues() const { return dialogues_; }
  std::size_t size() const { return dialogues_.size(); }
  bool empty() const { return dialogues_.empty(); }
  auto begin() const { return dialogues_.begin(); }
  auto end() const { return dialogues_.end(); }
  const Dialogue& operator[](std::size_t i) const { return dialogues_[i]; }

  bool operator==(const DialogueCorpus& other) const {
    return dialogues_ == other.dialogues_;
  }

 private:
  std::vector<Dialogue> dialogues_;
  std::set<std::string, std::less<>> ids_;
};

// One JSON object per line:
//   {"id": str, "split": str?, "characters": [{"name", "persona",
//    "gender_label": "F"|"M"|"N"|"U"}], "turns": [{"speaker_index", "text"}]}
DialogueCorpus parse_corpus(std::string_view jsonl,
                            const std::string& origin = "<corpus>");
DialogueCorpus load_corpus(const std::filesystem::path& path);

std::string serialize_corpus(const DialogueCorpus& corpus);
void write_corpus(const DialogueCorpus& corpus,
                  const std::filesystem::path& path);

// Dialogues whose split tag equals `split`, in corpus order.
DialogueCorpus filter_split(const DialogueCorpus& corpus,
                            std::string_view split);

// Total tokens over all turn texts.
std::size_t token_count(const Dialogue& dialogue);
std::size_t token_count(const DialogueCorpus& corpus);

}  // namespace genderation

#endif  // GENDERATION_CORPUS_H_
