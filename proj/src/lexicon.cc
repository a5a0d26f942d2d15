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

#include "genderation/lexicon.h"

#include <cstdlib>

#include "genderation/errors.h"
#include "genderation/io.h"
#include "genderation/text.h"

namespace genderation {

std::string_view to_string(Gender gender) {
  switch (gender) {
    case Gender::kFemale:
      return "female";
    case Gender::kMale:
      return "male";
    case Gender::kNeutral:
      break;
  }
  return "neutral";
}

Gender opposite(Gender gender) {
  switch (gender) {
    case Gender::kFemale:
      return Gender::kMale;
    case Gender::kMale:
      return Gender::kFemale;
    case Gender::kNeutral:
      break;
  }
  return Gender::kNeutral;
}

namespace {

class LexiconParser {
 public:
  LexiconParser(const std::string& origin,
                std::map<std::string, Gender, std::less<>>* entries,
                std::map<std::string, std::string, std::less<>>* counterpart,
                std::vector<SwapPair>* pairs, std::vector<std::string>* sources)
      : origin_(origin),
        entries_(entries),
        counterpart_(counterpart),
        pairs_(pairs),
        sources_(sources) {}

  void Line(std::string_view raw, std::size_t line) {
    line_ = line;
    const std::string_view text = trim(raw);
    if (text.empty()) return;
    if (text.starts_with("#source")) {
      StartSource(trim(text.substr(7)));
      return;
    }
    if (text.front() == '#') return;

    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos ||
        text.find(',', comma + 1) != std::string_view::npos) {
      Fail("expected exactly two comma-separated fields");
    }
    const std::string first = Word(trim(text.substr(0, comma)));
    const std::string_view second = trim(text.substr(comma + 1));
    if (sources_->empty()) StartSource("default");

    if (second == "F" || second == "M") {
      const Gender gender = second == "F" ? Gender::kFemale : Gender::kMale;
      if (CheckLocal(first, gender)) Insert(first, gender);
      return;
    }
    const std::string male = Word(second);
    if (first == male) Fail("pair members must differ: '" + first + "'");
    const bool female_ok = CheckLocal(first, Gender::kFemale);
    const bool male_ok = CheckLocal(male, Gender::kMale);
    if (!female_ok || !male_ok) return;
    Insert(first, Gender::kFemale);
    Insert(male, Gender::kMale);
    SwapPair pair{first, male};
    for (const SwapPair& existing : *pairs_) {
      if (existing == pair) return;
    }
    counterpart_->emplace(pair.female, pair.male);
    counterpart_->emplace(pair.male, pair.female);
    pairs_->push_back(std::move(pair));
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(origin_, line_, message);
  }

  void StartSource(std::string_view id) {
    if (id.empty()) Fail("#source needs an id");
    for (const std::string& existing : *sources_) {
      if (existing == id) Fail("duplicate source id '" + std::string(id) + "'");
    }
    sources_->emplace_back(id);
    local_.clear();
  }

  // Lexicon words must be exactly one token with no possessive suffix.
  std::string Word(std::string_view field) const {
    if (field.empty()) Fail("empty word");
    const TokenSequence seq = tokenize(field);
    if (seq.size() != 1 || seq.surface[0].begin != 0 ||
        seq.surface[0].end != field.size() || seq.surface[0].possessive()) {
      Fail("'" + std::string(field) + "' is not a single word");
    }
    return seq.tokens[0];
  }

  // Records the declaration for this source. Returns false when an earlier
  // source already fixed the opposite gender.
  bool CheckLocal(const std::string& word, Gender gender) {
    auto [it, inserted] = local_.emplace(word, gender);
    if (!inserted && it->second != gender) {
      Fail("conflict: '" + word + "' declared both female and male");
    }
    auto global = entries_->find(word);
    return global == entries_->end() || global->second == gender;
  }

  void Insert(const std::string& word, Gender gender) {
    entries_->emplace(word, gender);
  }

  const std::string& origin_;
  std::map<std::string, Gender, std::less<>>* entries_;
  std::map<std::string, std::string, std::less<>>* counterpart_;
  std::vector<SwapPair>* pairs_;
  std::vector<std::string>* sources_;
  std::map<std::string, Gender, std::less<>> local_;
  std::size_t line_ = 0;
};

}  // namespace

GenderedLexicon GenderedLexicon::parse(std::string_view contents,
                                       const std::string& origin) {
  GenderedLexicon lexicon;
  LexiconParser parser(origin, &lexicon.entries_, &lexicon.counterpart_,
                       &lexicon.pairs_, &lexicon.sources_);
  std::size_t line = 0;
  std::size_t start = 0;
  while (start < contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    parser.Line(contents.substr(start, end - start), ++line);
    start = end + 1;
  }
  return lexicon;
}

Gender GenderedLexicon::gender_of(std::string_view token) const {
  auto it = entries_.find(token);
  return it == entries_.end() ? Gender::kNeutral : it->second;
}

std::optional<std::string_view> GenderedLexicon::counterpart(
    std::string_view token) const {
  auto it = counterpart_.find(token);
  if (it == counterpart_.end()) return std::nullopt;
  return std::string_view(it->second);
}

std::string GenderedLexicon::swap(std::string_view surface) const {
  return swap_text(surface).text;
}

SwapResult GenderedLexicon::swap_text(std::string_view text) const {
  const TokenSequence seq = tokenize(text);
  SwapResult result;
  std::size_t copied = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto other = counterpart(seq.tokens[i]);
    if (!other) continue;
    const Span& span = seq.surface[i];
    result.text.append(text.substr(copied, span.begin - copied));
    const std::string_view stem =
        text.substr(span.begin, span.stem_end - span.begin);
    result.text += apply_case(*other, case_pattern(stem));
    copied = span.stem_end;
    ++result.swapped;
  }
  result.text.append(text.substr(copied));
  return result;
}

GenderedLexicon load_lexicon(const std::filesystem::path& path) {
  return GenderedLexicon::parse(read_file(path), path.string());
}

std::filesystem::path default_lexicon_path() {
  if (const char* env = std::getenv("GENDERATION_LEXICON");
      env != nullptr && *env != '\0') {
    return env;
  }
  return std::filesystem::path(GENDERATION_DATA_DIR) / "lexicon.txt";
}

std::filesystem::path resolve_lexicon_path(std::string_view flag) {
  if (flag.empty() || flag == "default") return default_lexicon_path();
  return std::filesystem::path(flag);
}

}  // namespace genderation
