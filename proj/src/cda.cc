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

#include "genderation/cda.h"

#include <json.hpp>

#include "genderation/errors.h"
#include "genderation/parallel.h"

namespace genderation {

std::optional<CdaFields> parse_cda_fields(std::string_view text) {
  if (text == "turns") return CdaFields::kTurns;
  if (text == "personas") return CdaFields::kPersonas;
  if (text == "both") return CdaFields::kBoth;
  return std::nullopt;
}

namespace {

GenderLabel Flip(GenderLabel label) {
  if (label == GenderLabel::kFemale) return GenderLabel::kMale;
  if (label == GenderLabel::kMale) return GenderLabel::kFemale;
  return label;
}

}  // namespace

AugmentedCorpus augment(const DialogueCorpus& corpus,
                        const GenderedLexicon& lexicon, CdaFields fields,
                        unsigned jobs) {
  const bool turns = fields != CdaFields::kPersonas;
  const bool personas = fields != CdaFields::kTurns;

  std::vector<std::optional<Dialogue>> copies(corpus.size());
  std::vector<std::size_t> swapped(corpus.size(), 0);
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    Dialogue copy = corpus[i];
    std::size_t n = 0;
    if (personas) {
      for (Character& c : copy.characters) {
        SwapResult r = lexicon.swap_text(c.persona);
        c.persona = std::move(r.text);
        n += r.swapped;
      }
    }
    if (turns) {
      for (Utterance& u : copy.turns) {
        SwapResult r = lexicon.swap_text(u.text);
        u.text = std::move(r.text);
        n += r.swapped;
      }
    }
    if (n == 0) return;
    for (Character& c : copy.characters) c.gender_label = Flip(c.gender_label);
    copy.id += kCdaSuffix;
    copies[i] = std::move(copy);
    swapped[i] = n;
  });

  AugmentedCorpus out{corpus, {}};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!copies[i]) continue;
    if (out.corpus.contains(copies[i]->id)) {
      throw ValidationError("augmented id '" + copies[i]->id +
                            "' collides with an existing dialogue");
    }
    out.records.push_back(
        AugmentationRecord{corpus[i].id, copies[i]->id, swapped[i]});
    out.corpus.add(std::move(*copies[i]));
  }
  return out;
}

std::string render_records_json(
    const std::vector<AugmentationRecord>& records) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const AugmentationRecord& r : records) {
    j.push_back({{"original_id", r.original_id},
                 {"augmented_id", r.augmented_id},
                 {"swapped_token_count", r.swapped_token_count}});
  }
  return j.dump(2) + "\n";
}

}  // namespace genderation
