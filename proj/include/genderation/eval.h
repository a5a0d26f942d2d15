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

#ifndef GENDERATION_EVAL_H_
#define GENDERATION_EVAL_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genderation/audit.h"
#include "genderation/bins.h"
#include "genderation/lexicon.h"
#include "genderation/ngram_model.h"

namespace genderation {

// Bag-of-tokens F1 between a generated and a gold response, in [0, 1].
// Two empty texts score 1; exactly one empty text scores 0.
double f1_overlap(std::string_view generated, std::string_view gold);

// Oracle mode generates each example with its own gold bin; forced mode
// uses one bin for every example.
struct EvalMode {
  std::optional<GenderednessBin> forced;

  static EvalMode oracle() { return {}; }
  static EvalMode force(GenderednessBin bin) { return {bin}; }
  std::string name() const;  // "oracle" or "forced-F0M+"
};

struct GenerationRecord {
  std::string context;
  std::string gold;
  std::string generated;
  GenderednessBin true_bin;
  GenderednessBin used_bin;
  double f1 = 0.0;

  bool operator==(const GenerationRecord&) const = default;
};

// Metrics for the test examples whose gold response falls in one bin.
struct SplitMetrics {
  std::uint64_t examples = 0;
  BiasReport generated;  // token counts over the generations
  double f1_sum = 0.0;

  double pct_gendered_words() const { return generated.pct_gendered_words(); }
  std::optional<double> pct_male_bias() const {
    return generated.pct_male_bias();
  }
  double f1() const {
    return examples == 0 ? 0.0 : f1_sum / static_cast<double>(examples);
  }
};

struct EvalReport {
  std::string label;
  std::string mode;
  // Indexed by the gold bin; empty for bins absent from the test set.
  std::array<std::optional<SplitMetrics>, kBinCount> per_bin;
  double overall_f1 = 0.0;
  std::vector<WordCount> top_words;
  std::vector<GenerationRecord> records;
};

// Produces a response for an example under `used_bin`.
using ResponseGenerator = std::function<std::string(
    const TrainingExample& example, GenderednessBin used_bin)>;

// Throws ValidationError on an empty test set.
EvalReport evaluate(const ResponseGenerator& generator,
                    const std::vector<TrainingExample>& test, EvalMode mode,
                    const GenderedLexicon& lexicon,
                    const StopwordSet& stopwords, unsigned jobs = 1,
                    std::size_t top_k = 20);

// The model ignores context, so each bin is decoded once and reused.
EvalReport evaluate(const ConditionalNGramModel& model,
                    const std::vector<TrainingExample>& test, EvalMode mode,
                    const GenerationConfig& config,
                    const GenderedLexicon& lexicon,
                    const StopwordSet& stopwords, unsigned jobs = 1,
                    std::size_t top_k = 20);

// Re-derives per-bin metrics and overall F1 from the per-example records.
EvalReport aggregate(std::vector<GenerationRecord> records,
                     const GenderedLexicon& lexicon,
                     const StopwordSet& stopwords, std::size_t top_k = 20);

enum class ReportFormat { kJson, kMarkdown };

// Throws ValidationError for anything but "json" or "markdown"/"md".
ReportFormat parse_report_format(std::string_view text);

// Markdown follows the per-bin layout (% gend. words, % male bias, F1 per
// gold-bin split, then overall F1) with F1 shown as a percentage, plus the
// top generated words, gendered ones marked "*". JSON keeps full precision
// and writes absent male bias as null.
std::string render_report(const EvalReport& report, ReportFormat format);

// Several reports as rows of one markdown table.
std::string render_table(const std::vector<EvalReport>& reports);

std::string serialize_generations(const std::vector<GenerationRecord>& records);

}  // namespace genderation

#endif  // GENDERATION_EVAL_H_
