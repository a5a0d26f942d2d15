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

#ifndef GENDERATION_DEMO_H_
#define GENDERATION_DEMO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include "genderation/ngram_model.h"
#include "genderation/synthetic.h"

namespace genderation {

struct DemoOptions {
  std::filesystem::path out_dir = "demo_out";
  // Bundled synthetic corpus when unset. A seed other than the default
  // regenerates the synthetic corpus instead of reading a file.
  std::optional<std::filesystem::path> corpus;
  std::uint64_t seed = kSyntheticSeed;
  std::filesystem::path lexicon;
  std::filesystem::path stopwords;
  TrainOptions train;
  GenerationConfig generation;
  unsigned jobs = 1;
};

std::filesystem::path bundled_corpus_path();

// audit -> cda -> bin -> train -> eval (gold, baseline, oracle bin and each
// forced bin) on the corpus' train/test splits. Every file written under
// out_dir depends only on the inputs and options, never on `jobs`.
// Progress lines go to `log`.
void run_demo(const DemoOptions& options, std::ostream& log);

}  // namespace genderation

#endif  // GENDERATION_DEMO_H_
