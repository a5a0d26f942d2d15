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

#ifndef GENDERATION_CDA_H_
#define GENDERATION_CDA_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genderation/corpus.h"
#include "genderation/lexicon.h"

namespace genderation {

// Which dialogue texts counterfactual augmentation looks at and rewrites.
enum class CdaFields { kTurns, kPersonas, kBoth };

std::optional<CdaFields> parse_cda_fields(std::string_view text);

inline constexpr std::string_view kCdaSuffix = "#cda";

struct AugmentationRecord {
  std::string original_id;
  std::string augmented_id;
  std::size_t swapped_token_count = 0;

  bool operator==(const AugmentationRecord&) const = default;
};

struct AugmentedCorpus {
  DialogueCorpus corpus;
  std::vector<AugmentationRecord> records;
};

// Copies every dialogue that has at least one swappable gendered word in
// the selected fields, swapping each of them for its counterpart. Copies get
// id + "#cda", flipped F/M character labels, and are appended after all
// originals in corpus order. Throws ValidationError if a copy's id is
// already taken.
AugmentedCorpus augment(const DialogueCorpus& corpus,
                        const GenderedLexicon& lexicon,
                        CdaFields fields = CdaFields::kBoth,
                        unsigned jobs = 1);

std::string render_records_json(const std::vector<AugmentationRecord>& records);

}  // namespace genderation

#endif  // GENDERATION_CDA_H_
