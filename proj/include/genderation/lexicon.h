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

#ifndef GENDERATION_LEXICON_H_
#define GENDERATION_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genderation {

enum class Gender { kNeutral, kFemale, kMale };

std::string_view to_string(Gender gender);
Gender opposite(Gender gender);

struct SwapPair {
  std::string female;
  std::string male;

  bool operator==(const SwapPair&) const = default;
};

struct SwapResult {
  std::string text;
  std::size_t swapped = 0;
};

// Gendered-word lexicon: word -> gender plus ordered female/male swap pairs.
// Immutable once built.
//
// Text format, one record per line:
//   female_form,male_form    a swap pair (both words become entries)
//   word,F  or  word,M       an unpaired entry
//   #source <id>             starts a new source list
//   # ...                    comment
// Earlier lines win when a word belongs to several pairs. Declaring one word
// with both genders inside a source list is an error; across source lists
// the first declaration wins and contradicting later records are skipped.
class GenderedLexicon {
 public:
  GenderedLexicon() = default;

  static GenderedLexicon parse(std::string_view contents,
                               const std::string& origin = "<lexicon>");

  // `token` must already be normalized.
  Gender gender_of(std::string_view token) const;

  // Opposite-gender form of a normalized pair member, by first match.
  std::optional<std::string_view> counterpart(std::string_view token) const;

  // Swaps every gendered word in `surface`, preserving case pattern and any
  // possessive suffix. Everything else is copied byte for byte.
  std::string swap(std::string_view surface) const;
  SwapResult swap_text(std::string_view text) const;

  const std::map<std::string, Gender, std::less<>>& entries() const {
    return entries_;
  }
  const std::vector<SwapPair>& swap_pairs() const { return pairs_; }
  const std::vector<std::string>& source_ids() const { return sources_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, Gender, std::less<>> entries_;
  std::map<std::string, std::string, std::less<>> counterpart_;
  std::vector<SwapPair> pairs_;
  std::vector<std::string> sources_;
};

GenderedLexicon load_lexicon(const std::filesystem::path& path);

// $GENDERATION_LEXICON when set, else the shipped data/lexicon.txt.
std::filesystem::path default_lexicon_path();

// Maps "default" (or an empty string) to default_lexicon_path().
std::filesystem::path resolve_lexicon_path(std::string_view flag);

}  // namespace genderation

#endif  // GENDERATION_LEXICON_H_
