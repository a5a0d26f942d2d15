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

#include "genderation/eval.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "genderation/errors.h"
#include "genderation/parallel.h"
#include "genderation/text.h"

namespace genderation {

double f1_overlap(std::string_view generated, std::string_view gold) {
  const TokenSequence gen = tokenize(generated);
  const TokenSequence ref = tokenize(gold);
  if (gen.empty() && ref.empty()) return 1.0;
  if (gen.empty() || ref.empty()) return 0.0;
  std::map<std::string_view, std::int64_t> bag;
  for (const std::string& t : ref.tokens) ++bag[t];
  std::uint64_t overlap = 0;
  for (const std::string& t : gen.tokens) {
    auto it = bag.find(t);
    if (it != bag.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  if (overlap == 0) return 0.0;
  // 2PR / (P + R) with P = o/|gen|, R = o/|gold| simplifies to this, which
  // is also exactly symmetric in floating point.
  return 2.0 * static_cast<double>(overlap) /
         static_cast<double>(gen.size() + ref.size());
}

std::string EvalMode::name() const {
  return forced ? "forced-" + forced->name() : "oracle";
}

EvalReport aggregate(std::vector<GenerationRecord> records,
                     const GenderedLexicon& lexicon,
                     const StopwordSet& stopwords, std::size_t top_k) {
  EvalReport report;
  std::array<std::vector<double>, kBinCount> f1s;
  std::vector<double> all_f1;
  std::vector<std::string> generations;
  generations.reserve(records.size());
  for (const GenerationRecord& r : records) {
    auto& split = report.per_bin[r.true_bin.index()];
    if (!split) split.emplace();
    ++split->examples;
    count_text(r.generated, lexicon, split->generated);
    f1s[r.true_bin.index()].push_back(r.f1);
    all_f1.push_back(r.f1);
    generations.push_back(r.generated);
  }
  // Summing in sorted order makes the totals independent of record order.
  auto sorted_sum = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    return std::accumulate(v.begin(), v.end(), 0.0);
  };
  for (std::size_t b = 0; b < kBinCount; ++b) {
    if (report.per_bin[b]) report.per_bin[b]->f1_sum = sorted_sum(f1s[b]);
  }
  if (!records.empty()) {
    report.overall_f1 = sorted_sum(all_f1) / static_cast<double>(records.size());
  }
  report.top_words = top_words(generations, stopwords, top_k, lexicon);
  report.records = std::move(records);
  return report;
}

EvalReport evaluate(const ResponseGenerator& generator,
                    const std::vector<TrainingExample>& test, EvalMode mode,
                    const GenderedLexicon& lexicon,
                    const StopwordSet& stopwords, unsigned jobs,
                    std::size_t top_k) {
  if (test.empty()) throw ValidationError("empty test set");
  std::vector<GenerationRecord> records(test.size());
  parallel_for(test.size(), jobs, [&](std::size_t i) {
    const TrainingExample& ex = test[i];
    GenerationRecord& r = records[i];
    r.context = ex.context;
    r.gold = ex.response;
    r.true_bin = ex.bin;
    r.used_bin = mode.forced ? *mode.forced : ex.bin;
    r.generated = generator(ex, r.used_bin);
    r.f1 = f1_overlap(r.generated, r.gold);
  });
  EvalReport report = aggregate(std::move(records), lexicon, stopwords, top_k);
  report.mode = mode.name();
  return report;
}

EvalReport evaluate(const ConditionalNGramModel& model,
                    const std::vector<TrainingExample>& test, EvalMode mode,
                    const GenerationConfig& config,
                    const GenderedLexicon& lexicon,
                    const StopwordSet& stopwords, unsigned jobs,
                    std::size_t top_k) {
  if (test.empty()) throw ValidationError("empty test set");
  std::array<bool, kBinCount> needed{};
  for (const TrainingExample& ex : test) {
    needed[(mode.forced ? *mode.forced : ex.bin).index()] = true;
  }
  std::array<std::string, kBinCount> decoded;
  parallel_for(kBinCount, jobs, [&](std::size_t b) {
    if (!needed[b]) return;
    decoded[b] =
        join_tokens(model.generate(GenderednessBin::from_index(b), config));
  });
  const ResponseGenerator lookup = [&decoded](const TrainingExample&,
                                              GenderednessBin used) {
    return decoded[used.index()];
  };
  return evaluate(lookup, test, mode, lexicon, stopwords, jobs, top_k);
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "markdown" || text == "md") return ReportFormat::kMarkdown;
  throw ValidationError("unknown report format '" + std::string(text) + "'");
}

namespace {

std::string Fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

nlohmann::ordered_json OptionalNumber(std::optional<double> v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string TableHeader() {
  std::ostringstream out;
  out << "| Model |";
  for (const GenderednessBin& b : kAllBins) {
    out << " " << b.name() << " % gend. words | " << b.name()
        << " % male bias | " << b.name() << " F1 |";
  }
  out << " All F1 |\n|---|";
  for (std::size_t i = 0; i < 3 * kBinCount + 1; ++i) out << "---:|";
  out << "\n";
  return out.str();
}

std::string TableRow(const EvalReport& report) {
  std::ostringstream out;
  out << "| " << (report.label.empty() ? report.mode : report.label) << " |";
  for (const auto& split : report.per_bin) {
    if (!split) {
      out << " - | - | - |";
      continue;
    }
    out << " " << format_pct(split->pct_gendered_words()) << " | "
        << format_pct(split->pct_male_bias()) << " | "
        << Fixed2(100.0 * split->f1()) << " |";
  }
  out << " " << Fixed2(100.0 * report.overall_f1) << " |\n";
  return out.str();
}

std::string TopWordsLine(const std::vector<WordCount>& words) {
  std::string out;
  for (const WordCount& w : words) {
    if (!out.empty()) out += ", ";
    out += w.word;
    if (w.gender != Gender::kNeutral) out += '*';
  }
  return out;
}

}  // namespace

std::string render_report(const EvalReport& report, ReportFormat format) {
  if (format == ReportFormat::kMarkdown) {
    std::ostringstream out;
    out << "## " << (report.label.empty() ? "Evaluation" : report.label)
        << " (" << report.mode << ")\n\n"
        << TableHeader() << TableRow(report) << "\n"
        << "Top " << report.top_words.size()
        << " generated words (stopwords removed, * marks gendered words): "
        << TopWordsLine(report.top_words) << "\n";
    return out.str();
  }
  nlohmann::ordered_json j;
  j["label"] = report.label;
  j["mode"] = report.mode;
  j["examples"] = report.records.size();
  j["overall_f1"] = report.overall_f1;
  nlohmann::ordered_json per_bin = nlohmann::ordered_json::object();
  for (std::size_t b = 0; b < kBinCount; ++b) {
    const auto& split = report.per_bin[b];
    if (!split) continue;
    per_bin[GenderednessBin::from_index(b).name()] = {
        {"examples", split->examples},
        {"total_tokens", split->generated.total_tokens},
        {"female_tokens", split->generated.female_tokens},
        {"male_tokens", split->generated.male_tokens},
        {"pct_gendered_words", split->pct_gendered_words()},
        {"pct_male_bias", OptionalNumber(split->pct_male_bias())},
        {"f1", split->f1()}};
  }
  j["per_bin"] = per_bin;
  nlohmann::ordered_json words = nlohmann::ordered_json::array();
  for (const WordCount& w : report.top_words) {
    words.push_back({{"word", w.word},
                     {"count", w.count},
                     {"gender", to_string(w.gender)}});
  }
  j["top_words"] = words;
  return j.dump(2) + "\n";
}

std::string render_table(const std::vector<EvalReport>& reports) {
  std::string out = TableHeader();
  for (const EvalReport& r : reports) out += TableRow(r);
  out += "\n";
  for (const EvalReport& r : reports) {
    out += "- " + (r.label.empty() ? r.mode : r.label) + ": " +
           TopWordsLine(r.top_words) + "\n";
  }
  return out;
}

std::string serialize_generations(
    const std::vector<GenerationRecord>& records) {
  std::string out;
  for (const GenerationRecord& r : records) {
    nlohmann::ordered_json j;
    j["context"] = r.context;
    j["gold"] = r.gold;
    j["generated"] = r.generated;
    j["true_bin"] = r.true_bin.name();
    j["used_bin"] = r.used_bin.name();
    j["f1"] = r.f1;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace genderation
