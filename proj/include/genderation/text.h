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

#ifndef GENDERATION_TEXT_H_
#define GENDERATION_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace genderation {

// Byte offsets of one token inside the text it was cut from. The word stem
// is [begin, stem_end); [stem_end, end) holds a stripped possessive suffix
// ("'s", possibly repeated) and is empty for ordinary words.
struct Span {
  std::size_t begin = 0;
  std::size_t stem_end = 0;
  std::size_t end = 0;

  bool possessive() const { return stem_end != end; }
  bool operator==(const Span&) const = default;
};

// Normalized tokens aligned 1:1 with their surface spans.
struct TokenSequence {
  std::vector<std::string> tokens;
  std::vector<Span> surface;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

// Splits `text` on maximal runs of non-alphanumeric characters, keeping
// apostrophes that sit between two word characters. Tokens are lowercased
// and trailing possessive "'s" is stripped from the token (the span keeps
// it). Non-ASCII letters are word characters; U+2019 counts as an apostrophe.
TokenSequence tokenize(std::string_view text);

// Lowercase, fold U+2019 to "'", strip trailing "'s". Idempotent.
std::string normalize(std::string_view word);

// Splits a surface word into (stem, possessive suffix).
std::size_t possessive_start(std::string_view word);

enum class CasePattern { kLower, kTitle, kUpper, kMixed };

CasePattern case_pattern(std::string_view word);

// Re-cases a lowercase word. kMixed leaves it lowercase.
std::string apply_case(std::string_view lowercase_word, CasePattern pattern);

std::string_view trim(std::string_view s);

}  // namespace genderation

#endif  // GENDERATION_TEXT_H_
