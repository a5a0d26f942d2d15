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

#ifndef GENDERATION_AUDIT_H_
#define GENDERATION_AUDIT_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "genderation/bins.h"
#include "genderation/corpus.h"
#include "genderation/lexicon.h"

namespace genderation {

// Raw counts behind every bias percentage. Percentages are always derived
// from the counts, so merged reports stay exact.
struct BiasReport {
  std::uint64_t total_tokens = 0;
  std::uint64_t female_tokens = 0;
  std::uint64_t male_tokens = 0;

  // Characters by gender label, indexed by GenderLabel.
  std::array<std::uint64_t, kGenderLabelCount> census{};
  // Lexicon hits inside persona texts.
  std::uint64_t persona_female_refs = 0;
  std::uint64_t persona_male_refs = 0;

  // Responses per bin, indexed by GenderednessBin::index().
  std::array<std::uint64_t, kBinCount> bin_counts{};

  double pct_gendered_words() const;
  // Absent when there are no gendered tokens.
  std::optional<double> pct_male_bias() const;
  std::optional<double> pct_female_bias() const;

  std::uint64_t response_count() const;
  // Absent when no responses were binned.
  std::optional<std::array<double, kBinCount>> bin_distribution() const;

  BiasReport& operator+=(const BiasReport& other);
  bool operator==(const BiasReport&) const = default;
};

BiasReport operator+(BiasReport a, const BiasReport& b);

// Counts gendered tokens over one text and adds them to `report`.
void count_text(std::string_view text, const GenderedLexicon& lexicon,
                BiasReport& report);

// Token counts and bins over every turn. Every turn counts as a response.
BiasReport audit_utterances(const DialogueCorpus& corpus,
                            const GenderedLexicon& lexicon, unsigned jobs = 1);

// How characters are counted when they recur across dialogues.
enum class CharacterScope {
  kUnique,       // once per distinct (name, persona, label)
  kPerDialogue,  // once per appearance; additive over corpus partitions
};

// Token counts over persona texts, persona references, and the census.
BiasReport audit_personas(const DialogueCorpus& corpus,
                          const GenderedLexicon& lexicon,
                          CharacterScope scope = CharacterScope::kUnique);

// Percent of turns per bin. Throws ValidationError("no responses") on an
// empty corpus.
std::array<double, kBinCount> bin_distribution(const DialogueCorpus& corpus,
                                               const GenderedLexicon& lexicon);

struct WordCount {
  std::string word;
  std::uint64_t count = 0;
  Gender gender = Gender::kNeutral;

  bool operator==(const WordCount&) const = default;
};

// The k most frequent non-stopword tokens, by (count desc, word asc).
std::vector<WordCount> top_words(const std::vector<std::string>& utterances,
                                 const std::set<std::string, std::less<>>&
                                     stopwords,
                                 std::size_t k, const GenderedLexicon& lexicon);

using StopwordSet = std::set<std::string, std::less<>>;

// One word per line, '#' comments. Words are normalized.
StopwordSet parse_stopwords(std::string_view contents);
StopwordSet load_stopwords(const std::filesystem::path& path);
std::filesystem::path default_stopwords_path();

// Renders a percentage to two decimals; absent renders as "0".
std::string format_pct(std::optional<double> value);

// Markdown tables in the layouts of the usual corpus bias tables: word
// counts (dataset, % gend. words, % male bias), character census with
// persona references, and the bin distribution.
std::string render_audit_markdown(std::string_view name,
                                  const BiasReport& utterances,
                                  const BiasReport& personas);

// Counts plus full-precision percentages; absent values are null.
std::string render_audit_json(std::string_view name,
                              const BiasReport& utterances,
                              const BiasReport& personas);

}  // namespace genderation

#endif  // GENDERATION_AUDIT_H_
