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

#include "genderation/audit.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "genderation/errors.h"
#include "genderation/io.h"
#include "genderation/parallel.h"
#include "genderation/text.h"

namespace genderation {

double BiasReport::pct_gendered_words() const {
  if (total_tokens == 0) return 0.0;
  return 100.0 * static_cast<double>(female_tokens + male_tokens) /
         static_cast<double>(total_tokens);
}

std::optional<double> BiasReport::pct_male_bias() const {
  const std::uint64_t gendered = female_tokens + male_tokens;
  if (gendered == 0) return std::nullopt;
  return 100.0 * static_cast<double>(male_tokens) /
         static_cast<double>(gendered);
}

std::optional<double> BiasReport::pct_female_bias() const {
  const std::uint64_t gendered = female_tokens + male_tokens;
  if (gendered == 0) return std::nullopt;
  return 100.0 * static_cast<double>(female_tokens) /
         static_cast<double>(gendered);
}

std::uint64_t BiasReport::response_count() const {
  std::uint64_t n = 0;
  for (std::uint64_t c : bin_counts) n += c;
  return n;
}

std::optional<std::array<double, kBinCount>> BiasReport::bin_distribution()
    const {
  const std::uint64_t n = response_count();
  if (n == 0) return std::nullopt;
  std::array<double, kBinCount> out{};
  for (std::size_t i = 0; i < kBinCount; ++i) {
    out[i] = 100.0 * static_cast<double>(bin_counts[i]) / static_cast<double>(n);
  }
  return out;
}

BiasReport& BiasReport::operator+=(const BiasReport& other) {
  total_tokens += other.total_tokens;
  female_tokens += other.female_tokens;
  male_tokens += other.male_tokens;
  for (std::size_t i = 0; i < census.size(); ++i) census[i] += other.census[i];
  persona_female_refs += other.persona_female_refs;
  persona_male_refs += other.persona_male_refs;
  for (std::size_t i = 0; i < kBinCount; ++i) {
    bin_counts[i] += other.bin_counts[i];
  }
  return *this;
}

BiasReport operator+(BiasReport a, const BiasReport& b) {
  a += b;
  return a;
}

void count_text(std::string_view text, const GenderedLexicon& lexicon,
                BiasReport& report) {
  for (const std::string& token : tokenize(text).tokens) {
    ++report.total_tokens;
    switch (lexicon.gender_of(token)) {
      case Gender::kFemale:
        ++report.female_tokens;
        break;
      case Gender::kMale:
        ++report.male_tokens;
        break;
      case Gender::kNeutral:
        break;
    }
  }
}

BiasReport audit_utterances(const DialogueCorpus& corpus,
                            const GenderedLexicon& lexicon, unsigned jobs) {
  std::vector<BiasReport> partial(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t d) {
    BiasReport& r = partial[d];
    for (const Utterance& turn : corpus[d].turns) {
      BiasReport one;
      count_text(turn.text, lexicon, one);
      GenderednessBin bin{one.female_tokens > 0, one.male_tokens > 0};
      ++one.bin_counts[bin.index()];
      r += one;
    }
  });
  BiasReport total;
  for (const BiasReport& r : partial) total += r;
  return total;
}

BiasReport audit_personas(const DialogueCorpus& corpus,
                          const GenderedLexicon& lexicon,
                          CharacterScope scope) {
  BiasReport report;
  std::set<std::tuple<std::string, std::string, GenderLabel>> seen;
  for (const Dialogue& d : corpus) {
    for (const Character& c : d.characters) {
      if (scope == CharacterScope::kUnique &&
          !seen.emplace(c.name, c.persona, c.gender_label).second) {
        continue;
      }
      ++report.census[static_cast<std::size_t>(c.gender_label)];
      count_text(c.persona, lexicon, report);
    }
  }
  report.persona_female_refs = report.female_tokens;
  report.persona_male_refs = report.male_tokens;
  return report;
}

std::array<double, kBinCount> bin_distribution(const DialogueCorpus& corpus,
                                               const GenderedLexicon& lexicon) {
  BiasReport report;
  for (const Dialogue& d : corpus) {
    for (const Utterance& turn : d.turns) {
      ++report.bin_counts[classify(turn.text, lexicon).index()];
    }
  }
  const auto dist = report.bin_distribution();
  if (!dist) throw ValidationError("no responses");
  return *dist;
}

std::vector<WordCount> top_words(const std::vector<std::string>& utterances,
                                 const StopwordSet& stopwords, std::size_t k,
                                 const GenderedLexicon& lexicon) {
  std::map<std::string, std::uint64_t, std::less<>> counts;
  for (const std::string& text : utterances) {
    for (std::string& token : tokenize(text).tokens) {
      if (stopwords.contains(token)) continue;
      ++counts[std::move(token)];
    }
  }
  std::vector<WordCount> all;
  all.reserve(counts.size());
  for (const auto& [word, count] : counts) {
    all.push_back(WordCount{word, count, lexicon.gender_of(word)});
  }
  // `counts` is already word-ordered, so a stable sort on count alone
  // leaves ties in lexicographic order.
  std::stable_sort(all.begin(), all.end(),
                   [](const WordCount& a, const WordCount& b) {
                     return a.count > b.count;
                   });
  if (all.size() > k) all.resize(k);
  return all;
}

StopwordSet parse_stopwords(std::string_view contents) {
  StopwordSet out;
  std::size_t start = 0;
  while (start < contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    const std::string_view line = trim(contents.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    out.insert(normalize(line));
  }
  return out;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  return parse_stopwords(read_file(path));
}

std::filesystem::path default_stopwords_path() {
  return std::filesystem::path(GENDERATION_DATA_DIR) / "stopwords.txt";
}

std::string format_pct(std::optional<double> value) {
  if (!value) return "0";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", *value);
  return buf;
}

namespace {

nlohmann::ordered_json OptionalNumber(std::optional<double> v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json ToJson(const BiasReport& r, bool with_bins) {
  nlohmann::ordered_json j;
  j["total_tokens"] = r.total_tokens;
  j["female_tokens"] = r.female_tokens;
  j["male_tokens"] = r.male_tokens;
  j["pct_gendered_words"] = r.pct_gendered_words();
  j["pct_male_bias"] = OptionalNumber(r.pct_male_bias());
  if (with_bins) {
    nlohmann::ordered_json counts;
    nlohmann::ordered_json pct;
    const auto dist = r.bin_distribution();
    for (std::size_t i = 0; i < kBinCount; ++i) {
      const std::string name = GenderednessBin::from_index(i).name();
      counts[name] = r.bin_counts[i];
      pct[name] = dist ? nlohmann::ordered_json((*dist)[i])
                       : nlohmann::ordered_json(nullptr);
    }
    j["bin_counts"] = counts;
    j["bin_distribution"] = pct;
  }
  return j;
}

}  // namespace

std::string render_audit_json(std::string_view name,
                              const BiasReport& utterances,
                              const BiasReport& personas) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["utterances"] = ToJson(utterances, true);
  nlohmann::ordered_json p = ToJson(personas, false);
  nlohmann::ordered_json census;
  for (std::size_t i = 0; i < kGenderLabelCount; ++i) {
    census[std::string(to_code(static_cast<GenderLabel>(i)))] =
        personas.census[i];
  }
  p["census"] = census;
  p["references"] = {{"F", personas.persona_female_refs},
                     {"M", personas.persona_male_refs}};
  j["personas"] = p;
  return j.dump(2) + "\n";
}

std::string render_audit_markdown(std::string_view name,
                                  const BiasReport& utterances,
                                  const BiasReport& personas) {
  std::ostringstream out;
  out << "## Gendered word counts\n\n"
      << "| Dataset | % gend. words | % male bias |\n"
      << "|---|---:|---:|\n"
      << "| " << name << " | " << format_pct(utterances.pct_gendered_words())
      << " | " << format_pct(utterances.pct_male_bias()) << " |\n\n";

  const auto& c = personas.census;
  const std::uint64_t all = c[0] + c[1] + c[2];
  out << "## Characters and persona references\n\n"
      << "| | F | M | N | All | Ref F | Ref M |\n"
      << "|---|---:|---:|---:|---:|---:|---:|\n"
      << "| " << name << " | " << c[0] << " | " << c[1] << " | " << c[2]
      << " | " << all << " | " << personas.persona_female_refs << " | "
      << personas.persona_male_refs << " |\n";
  if (c[3] > 0) out << "\n" << c[3] << " characters have no gender label.\n";
  out << "\n";

  out << "## Genderedness bins\n\n| |";
  for (const GenderednessBin& b : kAllBins) out << " " << b.name() << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < kBinCount; ++i) out << "---:|";
  out << "\n| % of responses |";
  const auto dist = utterances.bin_distribution();
  for (std::size_t i = 0; i < kBinCount; ++i) {
    out << " "
        << format_pct(dist ? std::optional<double>((*dist)[i]) : std::nullopt)
        << " |";
  }
  out << "\n";
  return out.str();
}

}  // namespace genderation
