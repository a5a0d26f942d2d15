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

#ifndef GENDERATION_SYNTHETIC_H_
#define GENDERATION_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>

#include "genderation/corpus.h"

namespace genderation {

inline constexpr std::uint64_t kSyntheticSeed = 20191107;
inline constexpr std::size_t kSyntheticDialogues = 200;

// Template-built fantasy dialogues with labelled characters and personas,
// skewed towards male references the way crowd-written fantasy data tends
// to be. The first 80% of dialogues are tagged "train", then 10% "valid"
// and 10% "test". Output depends only on the arguments.
DialogueCorpus make_synthetic_corpus(
    std::uint64_t seed = kSyntheticSeed,
    std::size_t dialogues = kSyntheticDialogues);

}  // namespace genderation

#endif  // GENDERATION_SYNTHETIC_H_
