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

#ifndef GENDERATION_NGRAM_MODEL_H_
#define GENDERATION_NGRAM_MODEL_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genderation/bins.h"

namespace genderation {

struct TrainOptions {
  std::size_t order = 3;
  // Weight of the per-bin estimate against the all-bins estimate.
  double lambda = 0.7;
  // Add-k smoothing constant.
  double k = 0.01;
  // Tokens seen fewer times than this become <unk>.
  std::size_t min_count = 2;
};

struct GenerationConfig {
  std::size_t beam_width = 5;
  std::size_t max_length = 30;
  std::uint64_t seed = 20191107;
};

// Response-only n-gram language model with one count table per genderedness
// bin plus a shared table over all bins:
//
//   P(t | c, bin) = lambda * P_bin(t | c) + (1 - lambda) * P_shared(t | c)
//
// Each component is add-k smoothed over the whole vocabulary and backs off
// to the longest context suffix that was seen in training, down to the
// unigram table (uniform when a bin has no data at all). Immutable after
// training, so concurrent generation is safe.
class ConditionalNGramModel {
 public:
  using TokenId = std::uint32_t;
  static constexpr TokenId kBos = 0;
  static constexpr TokenId kEos = 1;
  static constexpr TokenId kUnk = 2;
  static constexpr std::string_view kBosToken = "<bos>";
  static constexpr std::string_view kEosToken = "<eos>";
  static constexpr std::string_view kUnkToken = "<unk>";

  // Throws ValidationError on an empty example list or bad options.
  static ConditionalNGramModel train(
      const std::vector<TrainingExample>& examples,
      const TrainOptions& options = {});

  std::size_t order() const { return order_; }
  double lambda() const { return lambda_; }
  double k() const { return k_; }
  std::size_t min_count() const { return min_count_; }
  const std::vector<std::string>& vocab() const { return vocab_; }
  std::size_t vocab_size() const { return vocab_.size(); }

  TokenId id_of(std::string_view token) const;

  // Same counts, different interpolation weight. lambda = 0 ignores bins.
  ConditionalNGramModel with_lambda(double lambda) const;

  // `context` holds preceding tokens (normalized words or the special
  // tokens); only the last order-1 are used, left-padded with <bos>.
  double prob(GenderednessBin bin, std::span<const std::string> context,
              std::string_view token) const;
  double prob(GenderednessBin bin, std::span<const TokenId> context,
              TokenId token) const;

  // Probabilities of every vocabulary item, indexed by TokenId.
  std::vector<double> distribution(GenderednessBin bin,
                                   std::span<const TokenId> context) const;

  // Raw n-gram count in one bin (or the shared table when `shared`).
  std::uint64_t count(GenderednessBin bin, std::span<const TokenId> context,
                      TokenId token, bool shared = false) const;

  // Beam search over prob(. | bin). Hypotheses end at <eos> or max_length;
  // returns the best-scoring complete hypothesis, ties going to the
  // lexicographically smallest token sequence. <bos> and <unk> are never
  // emitted. The returned tokens exclude <eos>.
  std::vector<std::string> generate(GenderednessBin bin,
                                    const GenerationConfig& config) const;

  std::string to_json() const;
  static ConditionalNGramModel from_json(std::string_view text,
                                         const std::string& origin =
                                             "<model>");
  void save(const std::filesystem::path& path) const;
  static ConditionalNGramModel load(const std::filesystem::path& path);

  bool operator==(const ConditionalNGramModel& other) const;

 private:
  using Context = std::vector<TokenId>;

  struct ContextHash {
    std::size_t operator()(const Context& c) const noexcept;
  };

  struct Row {
    std::uint64_t total = 0;
    std::unordered_map<TokenId, std::uint64_t> next;

    bool operator==(const Row&) const = default;
  };

  // tables_[model][context_length]; model kBinCount is the shared table.
  using Table = std::unordered_map<Context, Row, ContextHash>;
  static constexpr std::size_t kShared = kBinCount;

  ConditionalNGramModel() = default;

  void Init(std::size_t order, double lambda, double k, std::size_t min_count,
            std::vector<std::string> vocab);
  void AddNgram(std::size_t bin, std::span<const TokenId> ngram,
                std::uint64_t n);
  const Row* FindRow(std::size_t model, std::span<const TokenId> context) const;
  Context PadContext(std::span<const TokenId> context) const;

  std::size_t order_ = 0;
  double lambda_ = 0.0;
  double k_ = 0.0;
  std::size_t min_count_ = 0;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, TokenId> index_;
  std::array<std::vector<Table>, kBinCount + 1> tables_;
};

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace genderation

#endif  // GENDERATION_NGRAM_MODEL_H_
