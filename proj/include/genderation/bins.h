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

#ifndef GENDERATION_BINS_H_
#define GENDERATION_BINS_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genderation/corpus.h"
#include "genderation/lexicon.h"

namespace genderation {

// Genderedness of a response: whether it contains at least one female and
// at least one male lexicon word. Rendered F0M0, F0M+, F+M0, F+M+.
struct GenderednessBin {
  bool female_present = false;
  bool male_present = false;

  // Index in report order: F0M0, F0M+, F+M0, F+M+.
  constexpr std::size_t index() const {
    return (female_present ? 2 : 0) + (male_present ? 1 : 0);
  }
  static constexpr GenderednessBin from_index(std::size_t i) {
    return GenderednessBin{(i & 2) != 0, (i & 1) != 0};
  }

  std::string name() const;           // "F0M+"
  std::string control_token() const;  // "<F0M+>"

  // The bin obtained by swapping every gendered word.
  GenderednessBin mirrored() const {
    return GenderednessBin{male_present, female_present};
  }

  bool operator==(const GenderednessBin&) const = default;
};

inline constexpr std::size_t kBinCount = 4;

inline constexpr std::array<GenderednessBin, kBinCount> kAllBins = {
    GenderednessBin::from_index(0), GenderednessBin::from_index(1),
    GenderednessBin::from_index(2), GenderednessBin::from_index(3)};

// Accepts "F0M+", "<F0M+>", and the digit form "F0M1".
std::optional<GenderednessBin> parse_bin(std::string_view text);

// Any response -> bin mapping can drive control tokens; the word-list
// function below is the one shipped.
using BinningFunction = std::function<GenderednessBin(std::string_view)>;

GenderednessBin classify(std::string_view response,
                         const GenderedLexicon& lexicon);

BinningFunction word_list_binning(const GenderedLexicon& lexicon);

struct TrainingExample {
  std::string context;
  std::string response;
  GenderednessBin bin;
  std::string control_token;  // empty when not annotated

  bool operator==(const TrainingExample&) const = default;
};

// Separates personas, turns and the control token inside a context.
inline constexpr char kContextSeparator = '\n';

// One example per turn after the first. Context is every non-empty persona
// (character order) followed by all earlier turns, oldest first, joined by
// kContextSeparator; when `annotate`, the control token is appended after
// one more separator. Order follows the corpus, then turn index.
std::vector<TrainingExample> extract_examples(const DialogueCorpus& corpus,
                                              const BinningFunction& binning,
                                              bool annotate,
                                              unsigned jobs = 1);
std::vector<TrainingExample> extract_examples(const DialogueCorpus& corpus,
                                              const GenderedLexicon& lexicon,
                                              bool annotate,
                                              unsigned jobs = 1);

// Replaces every control token with `bin`'s rendering. Unannotated
// examples throw ValidationError.
std::vector<TrainingExample> force_bin(std::vector<TrainingExample> examples,
                                       GenderednessBin bin);

// {"context", "response", "bin", "control_token"} per line.
std::string serialize_examples(const std::vector<TrainingExample>& examples);
std::vector<TrainingExample> parse_examples(std::string_view jsonl,
                                            const std::string& origin =
                                                "<examples>");
void write_examples(const std::vector<TrainingExample>& examples,
                    const std::filesystem::path& path);
std::vector<TrainingExample> load_examples(const std::filesystem::path& path);

}  // namespace genderation

#endif  // GENDERATION_BINS_H_
