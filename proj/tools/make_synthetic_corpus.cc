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

// Regenerates data/synthetic_corpus.jsonl:
//   make_synthetic_corpus [out.jsonl] [seed]

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include "genderation/corpus.h"
#include "genderation/synthetic.h"

int main(int argc, char** argv) {
  try {
    const std::uint64_t seed =
        argc > 2 ? std::stoull(argv[2]) : genderation::kSyntheticSeed;
    const auto corpus = genderation::make_synthetic_corpus(seed);
    if (argc > 1) {
      genderation::write_corpus(corpus, argv[1]);
    } else {
      std::cout << genderation::serialize_corpus(corpus);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
