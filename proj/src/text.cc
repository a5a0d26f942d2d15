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

#include "genderation/text.h"

#include <cctype>

namespace genderation {
namespace {

enum class UnitKind { kWord, kApostrophe, kSeparator };

struct Unit {
  UnitKind kind;
  std::size_t length;
};

bool IsAsciiAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

// Classifies the character starting at byte `pos`. Malformed UTF-8 is
// consumed one byte at a time as a word character.
Unit UnitAt(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 0x80) {
    if (IsAsciiAlnum(c)) return {UnitKind::kWord, 1};
    if (c == '\'') return {UnitKind::kApostrophe, 1};
    return {UnitKind::kSeparator, 1};
  }
  std::size_t length = 1;
  if (c >= 0xC2 && c <= 0xDF) {
    length = 2;
  } else if (c >= 0xE0 && c <= 0xEF) {
    length = 3;
  } else if (c >= 0xF0 && c <= 0xF4) {
    length = 4;
  }
  if (pos + length > text.size()) return {UnitKind::kWord, 1};
  for (std::size_t i = 1; i < length; ++i) {
    const auto cont = static_cast<unsigned char>(text[pos + i]);
    if ((cont & 0xC0) != 0x80) return {UnitKind::kWord, 1};
  }
  if (length == 2 && c == 0xC2 &&
      static_cast<unsigned char>(text[pos + 1]) >= 0xA0) {
    return {UnitKind::kSeparator, 2};  // NBSP and Latin-1 punctuation
  }
  if (length == 3 && c == 0xE2) {
    const auto b1 = static_cast<unsigned char>(text[pos + 1]);
    const auto b2 = static_cast<unsigned char>(text[pos + 2]);
    if (b1 == 0x80 && b2 == 0x99) return {UnitKind::kApostrophe, 3};
    if (b1 == 0x80 || b1 == 0x81) return {UnitKind::kSeparator, 3};
  }
  return {UnitKind::kWord, length};
}

bool EndsWithApostrophe(std::string_view s, std::size_t end,
                        std::size_t* width) {
  if (end >= 1 && s[end - 1] == '\'') {
    *width = 1;
    return true;
  }
  if (end >= 3 && s.substr(end - 3, 3) == "\xE2\x80\x99") {
    *width = 3;
    return true;
  }
  return false;
}

std::string LowerFold(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word.substr(i, 3) == "\xE2\x80\x99") {
      out += '\'';
      i += 2;
      continue;
    }
    const auto c = static_cast<unsigned char>(word[i]);
    out += static_cast<char>(c < 0x80 ? std::tolower(c) : c);
  }
  return out;
}

}  // namespace

std::size_t possessive_start(std::string_view word) {
  std::size_t end = word.size();
  while (end >= 3 && (word[end - 1] == 's' || word[end - 1] == 'S')) {
    std::size_t width = 0;
    if (!EndsWithApostrophe(word, end - 1, &width)) break;
    const std::size_t stem = end - 1 - width;
    if (stem == 0) break;
    end = stem;
  }
  return end;
}

std::string normalize(std::string_view word) {
  std::string folded = LowerFold(word);
  folded.resize(possessive_start(folded));
  return folded;
}

TokenSequence tokenize(std::string_view text) {
  TokenSequence out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    Unit unit = UnitAt(text, pos);
    if (unit.kind != UnitKind::kWord) {
      pos += unit.length;
      continue;
    }
    const std::size_t begin = pos;
    pos += unit.length;
    while (pos < text.size()) {
      unit = UnitAt(text, pos);
      if (unit.kind == UnitKind::kWord) {
        pos += unit.length;
      } else if (unit.kind == UnitKind::kApostrophe &&
                 pos + unit.length < text.size() &&
                 UnitAt(text, pos + unit.length).kind == UnitKind::kWord) {
        pos += unit.length;
      } else {
        break;
      }
    }
    const std::string_view word = text.substr(begin, pos - begin);
    const std::size_t stem = possessive_start(word);
    out.tokens.push_back(LowerFold(word.substr(0, stem)));
    out.surface.push_back(Span{begin, begin + stem, pos});
  }
  return out;
}

CasePattern case_pattern(std::string_view word) {
  std::size_t letters = 0;
  std::size_t upper = 0;
  bool first_upper = false;
  for (char ch : word) {
    const auto c = static_cast<unsigned char>(ch);
    if (!std::isalpha(c) || c >= 0x80) continue;
    const bool is_upper = std::isupper(c) != 0;
    if (letters == 0) first_upper = is_upper;
    ++letters;
    if (is_upper) ++upper;
  }
  if (upper == 0) return CasePattern::kLower;
  if (upper == 1 && first_upper) return CasePattern::kTitle;
  if (upper == letters) return CasePattern::kUpper;
  return CasePattern::kMixed;
}

std::string apply_case(std::string_view lowercase_word, CasePattern pattern) {
  std::string out(lowercase_word);
  if (pattern == CasePattern::kUpper) {
    for (char& ch : out) {
      const auto c = static_cast<unsigned char>(ch);
      if (c < 0x80) ch = static_cast<char>(std::toupper(c));
    }
  } else if (pattern == CasePattern::kTitle) {
    for (char& ch : out) {
      const auto c = static_cast<unsigned char>(ch);
      if (c < 0x80 && std::isalpha(c)) {
        ch = static_cast<char>(std::toupper(c));
        break;
      }
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  const std::size_t first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const std::size_t last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

}  // namespace genderation
