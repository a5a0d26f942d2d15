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

#include "genderation/ngram_model.h"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "genderation/errors.h"
#include "genderation/io.h"
#include "genderation/text.h"

namespace genderation {

namespace {

constexpr std::string_view kFormatTag = "genderation-ngram";
constexpr int kFormatVersion = 1;

}  // namespace

std::size_t ConditionalNGramModel::ContextHash::operator()(
    const Context& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (TokenId id : c) {
    h ^= id;
    h *= 1099511628211ull;
  }
  return h;
}

void ConditionalNGramModel::Init(std::size_t order, double lambda, double k,
                                 std::size_t min_count,
                                 std::vector<std::string> vocab) {
  if (order < 1) throw ValidationError("order must be at least 1");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("lambda must lie in [0, 1]");
  }
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ValidationError("k must be positive");
  }
  order_ = order;
  lambda_ = lambda;
  k_ = k;
  min_count_ = min_count;
  vocab_ = std::move(vocab);
  index_.clear();
  for (TokenId i = 0; i < vocab_.size(); ++i) {
    if (!index_.emplace(vocab_[i], i).second) {
      throw ValidationError("duplicate vocabulary item '" + vocab_[i] + "'");
    }
  }
  for (auto& tables : tables_) tables.assign(order_, Table{});
}

void ConditionalNGramModel::AddNgram(std::size_t bin,
                                     std::span<const TokenId> ngram,
                                     std::uint64_t n) {
  const TokenId target = ngram.back();
  const std::span<const TokenId> full = ngram.first(ngram.size() - 1);
  for (std::size_t len = 0; len < order_; ++len) {
    const auto suffix = full.last(len);
    Context key(suffix.begin(), suffix.end());
    for (std::size_t model : {bin, kShared}) {
      Row& row = tables_[model][len][key];
      row.total += n;
      row.next[target] += n;
    }
  }
}

ConditionalNGramModel ConditionalNGramModel::train(
    const std::vector<TrainingExample>& examples, const TrainOptions& options) {
  if (examples.empty()) throw ValidationError("no training examples");

  std::vector<std::vector<std::string>> responses;
  responses.reserve(examples.size());
  std::map<std::string, std::size_t> freq;
  for (const TrainingExample& ex : examples) {
    responses.push_back(tokenize(ex.response).tokens);
    for (const std::string& t : responses.back()) ++freq[t];
  }
  std::vector<std::string> vocab{std::string(kBosToken),
                                 std::string(kEosToken),
                                 std::string(kUnkToken)};
  for (const auto& [word, n] : freq) {
    if (n >= options.min_count) vocab.push_back(word);
  }

  ConditionalNGramModel model;
  model.Init(options.order, options.lambda, options.k, options.min_count,
             std::move(vocab));

  std::vector<TokenId> stream;
  for (std::size_t e = 0; e < examples.size(); ++e) {
    stream.assign(model.order_ - 1, kBos);
    for (const std::string& t : responses[e]) stream.push_back(model.id_of(t));
    stream.push_back(kEos);
    const std::size_t bin = examples[e].bin.index();
    for (std::size_t i = model.order_ - 1; i < stream.size(); ++i) {
      model.AddNgram(bin,
                     std::span<const TokenId>(stream).subspan(
                         i + 1 - model.order_, model.order_),
                     1);
    }
  }
  return model;
}

ConditionalNGramModel::TokenId ConditionalNGramModel::id_of(
    std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? kUnk : it->second;
}

ConditionalNGramModel ConditionalNGramModel::with_lambda(double lambda) const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("lambda must lie in [0, 1]");
  }
  ConditionalNGramModel copy = *this;
  copy.lambda_ = lambda;
  return copy;
}

ConditionalNGramModel::Context ConditionalNGramModel::PadContext(
    std::span<const TokenId> context) const {
  const std::size_t want = order_ - 1;
  Context out;
  out.reserve(want);
  if (context.size() < want) out.assign(want - context.size(), kBos);
  const auto tail = context.size() > want ? context.last(want) : context;
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

const ConditionalNGramModel::Row* ConditionalNGramModel::FindRow(
    std::size_t model, std::span<const TokenId> context) const {
  for (std::size_t len = order_; len-- > 0;) {
    const auto suffix = context.last(len);
    const Table& table = tables_[model][len];
    auto it = table.find(Context(suffix.begin(), suffix.end()));
    if (it != table.end() && it->second.total > 0) return &it->second;
  }
  return nullptr;
}

std::vector<double> ConditionalNGramModel::distribution(
    GenderednessBin bin, std::span<const TokenId> context) const {
  const Context padded = PadContext(context);
  const double v = static_cast<double>(vocab_.size());
  std::vector<double> out(vocab_.size(), 0.0);
  auto accumulate = [&](std::size_t model, double weight) {
    if (weight == 0.0) return;
    const Row* row = FindRow(model, padded);
    const double total = row ? static_cast<double>(row->total) : 0.0;
    const double denom = total + k_ * v;
    const double base = weight * k_ / denom;
    for (double& p : out) p += base;
    if (row) {
      for (const auto& [id, n] : row->next) {
        out[id] += weight * static_cast<double>(n) / denom;
      }
    }
  };
  accumulate(bin.index(), lambda_);
  accumulate(kShared, 1.0 - lambda_);
  return out;
}

double ConditionalNGramModel::prob(GenderednessBin bin,
                                   std::span<const TokenId> context,
                                   TokenId token) const {
  const Context padded = PadContext(context);
  const double v = static_cast<double>(vocab_.size());
  auto component = [&](std::size_t model) {
    const Row* row = FindRow(model, padded);
    if (row == nullptr) return 1.0 / v;
    auto it = row->next.find(token);
    const double n = it == row->next.end() ? 0.0 : static_cast<double>(it->second);
    return (n + k_) / (static_cast<double>(row->total) + k_ * v);
  };
  double p = 0.0;
  if (lambda_ > 0.0) p += lambda_ * component(bin.index());
  if (lambda_ < 1.0) p += (1.0 - lambda_) * component(kShared);
  return p;
}

double ConditionalNGramModel::prob(GenderednessBin bin,
                                   std::span<const std::string> context,
                                   std::string_view token) const {
  std::vector<TokenId> ids;
  ids.reserve(context.size());
  for (const std::string& t : context) ids.push_back(id_of(t));
  return prob(bin, ids, id_of(token));
}

std::uint64_t ConditionalNGramModel::count(GenderednessBin bin,
                                           std::span<const TokenId> context,
                                           TokenId token, bool shared) const {
  const std::size_t len = std::min(context.size(), order_ - 1);
  const auto suffix = context.last(len);
  const Table& table = tables_[shared ? kShared : bin.index()][len];
  auto it = table.find(Context(suffix.begin(), suffix.end()));
  if (it == table.end()) return 0;
  auto jt = it->second.next.find(token);
  return jt == it->second.next.end() ? 0 : jt->second;
}

std::vector<std::string> ConditionalNGramModel::generate(
    GenderednessBin bin, const GenerationConfig& config) const {
  if (config.beam_width < 1) throw ValidationError("beam_width must be >= 1");
  if (config.max_length < 1) throw ValidationError("max_length must be >= 1");

  struct Hypothesis {
    std::vector<TokenId> tokens;
    double score = 0.0;
  };
  auto better = [this](const Hypothesis& a, const Hypothesis& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::lexicographical_compare(
        a.tokens.begin(), a.tokens.end(), b.tokens.begin(), b.tokens.end(),
        [this](TokenId x, TokenId y) { return vocab_[x] < vocab_[y]; });
  };

  // Candidates reference their parent hypothesis so expanding a beam does
  // not copy |vocab| token vectors.
  struct Candidate {
    std::size_t parent;
    TokenId token;
    double score;
  };
  auto less_tokens = [this](TokenId x, TokenId y) {
    return vocab_[x] < vocab_[y];
  };

  std::vector<Hypothesis> live{Hypothesis{}};
  std::vector<Hypothesis> finished;
  std::vector<Candidate> candidates;
  for (std::size_t step = 0; step < config.max_length && !live.empty();
       ++step) {
    candidates.clear();
    for (std::size_t h = 0; h < live.size(); ++h) {
      const std::vector<double> dist = distribution(bin, live[h].tokens);
      for (TokenId t = 0; t < vocab_.size(); ++t) {
        if (t == kBos || t == kUnk) continue;
        candidates.push_back(Candidate{h, t, live[h].score + std::log(dist[t])});
      }
    }
    auto candidate_better = [&](const Candidate& a, const Candidate& b) {
      if (a.score != b.score) return a.score > b.score;
      const auto& pa = live[a.parent].tokens;
      const auto& pb = live[b.parent].tokens;
      if (a.parent != b.parent) {
        // Parents of equal length differ somewhere unless they are equal.
        const auto [ia, ib] = std::mismatch(pa.begin(), pa.end(), pb.begin());
        if (ia != pa.end()) return less_tokens(*ia, *ib);
      }
      return less_tokens(a.token, b.token);
    };
    const std::size_t keep = std::min(config.beam_width, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + keep,
                      candidates.end(), candidate_better);

    std::vector<Hypothesis> next;
    for (std::size_t i = 0; i < keep; ++i) {
      const Candidate& c = candidates[i];
      Hypothesis h{live[c.parent].tokens, c.score};
      if (c.token == kEos) {
        finished.push_back(std::move(h));
      } else {
        h.tokens.push_back(c.token);
        next.push_back(std::move(h));
      }
    }
    live = std::move(next);
    if (live.empty()) break;
    if (step + 1 == config.max_length) {
      for (Hypothesis& h : live) finished.push_back(std::move(h));
      break;
    }
    // Scores only decrease, so no live hypothesis can overtake a finished
    // one that already scores at least as well.
    const auto best_finished =
        std::min_element(finished.begin(), finished.end(), better);
    const auto best_live = std::min_element(live.begin(), live.end(), better);
    if (best_finished != finished.end() &&
        best_finished->score >= best_live->score) {
      break;
    }
  }

  const auto best = std::min_element(finished.begin(), finished.end(), better);
  std::vector<std::string> out;
  if (best == finished.end()) return out;
  for (TokenId t : best->tokens) out.push_back(vocab_[t]);
  return out;
}

std::string ConditionalNGramModel::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = kFormatTag;
  j["version"] = kFormatVersion;
  j["order"] = order_;
  j["lambda"] = lambda_;
  j["k"] = k_;
  j["min_count"] = min_count_;
  j["vocab"] = vocab_;
  nlohmann::ordered_json counts;
  for (std::size_t b = 0; b < kBinCount; ++b) {
    // Full-order n-grams only; lower orders are their marginals.
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& [context, row] : tables_[b][order_ - 1]) {
      for (const auto& [token, n] : row.next) {
        std::vector<std::uint64_t> entry(context.begin(), context.end());
        entry.push_back(token);
        entry.push_back(n);
        rows.push_back(std::move(entry));
      }
    }
    std::sort(rows.begin(), rows.end());
    counts[GenderednessBin::from_index(b).name()] = rows;
  }
  j["counts"] = counts;
  return j.dump() + "\n";
}

ConditionalNGramModel ConditionalNGramModel::from_json(
    std::string_view text, const std::string& origin) {
  ConditionalNGramModel model;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("format").get<std::string>() != kFormatTag) {
      throw ParseError(origin, 0, "not a genderation n-gram model");
    }
    if (j.at("version").get<int>() != kFormatVersion) {
      throw ParseError(origin, 0, "unsupported model version");
    }
    model.Init(j.at("order").get<std::size_t>(), j.at("lambda").get<double>(),
               j.at("k").get<double>(), j.at("min_count").get<std::size_t>(),
               j.at("vocab").get<std::vector<std::string>>());
    if (model.vocab_.size() < 3 || model.vocab_[kBos] != kBosToken ||
        model.vocab_[kEos] != kEosToken || model.vocab_[kUnk] != kUnkToken) {
      throw ParseError(origin, 0, "vocabulary must start with <bos> <eos> <unk>");
    }
    const auto& counts = j.at("counts");
    for (std::size_t b = 0; b < kBinCount; ++b) {
      const std::string name = GenderednessBin::from_index(b).name();
      for (const auto& entry : counts.at(name)) {
        const auto values = entry.get<std::vector<std::uint64_t>>();
        if (values.size() != model.order_ + 1) {
          throw ParseError(origin, 0, "n-gram entry has wrong length");
        }
        std::vector<TokenId> ngram;
        for (std::size_t i = 0; i < model.order_; ++i) {
          if (values[i] >= model.vocab_.size()) {
            throw ParseError(origin, 0, "token id out of range");
          }
          ngram.push_back(static_cast<TokenId>(values[i]));
        }
        model.AddNgram(b, ngram, values.back());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(origin, 0, e.what());
  }
  return model;
}

void ConditionalNGramModel::save(const std::filesystem::path& path) const {
  write_file(path, to_json());
}

ConditionalNGramModel ConditionalNGramModel::load(
    const std::filesystem::path& path) {
  return from_json(read_file(path), path.string());
}

bool ConditionalNGramModel::operator==(
    const ConditionalNGramModel& other) const {
  return order_ == other.order_ && lambda_ == other.lambda_ &&
         k_ == other.k_ && min_count_ == other.min_count_ &&
         vocab_ == other.vocab_ && tables_ == other.tables_;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace genderation
