// Copyright 2026 The newstrack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "newstrack/time.hpp"
#include "newstrack/tweet.hpp"
#include "newstrack/vecspace.hpp"
#include "newstrack/vocabulary.hpp"

namespace newstrack {

/// Skip-gram training parameters. The dynamic context window draws its
/// radius uniformly from 1..max_context at every position.
struct SgnsConfig {
  std::size_t dim = 200;
  std::size_t max_context = 5;
  std::size_t epochs = 15;
  double learning_rate = 0.025;
  std::size_t min_count = 2;
  std::uint64_t seed = 1;

  /// Throws ConfigError on a non-positive dimension, window, epoch count or rate.
  void validate() const;
};

struct SgnsTrainStats {
  std::uint64_t words = 0;  // center positions visited, all epochs
  std::uint64_t pairs = 0;  // (center, context) updates, all epochs
};

/// Skip-gram embeddings with a hierarchical-softmax output layer. Immutable.
class SgnsModel {
 public:
  SgnsModel(Vocabulary vocab, std::size_t dim, std::vector<float> input,
            std::vector<float> inner, Instant trained_at, SgnsTrainStats stats = {});

  std::size_t dim() const { return dim_; }
  const Vocabulary& vocab() const { return vocab_; }
  Instant trained_at() const { return trained_at_; }
  const SgnsTrainStats& stats() const { return stats_; }
  /// False for models loaded from a snapshot, which keep input vectors only.
  bool has_output_layer() const { return vocab_.has_tree(); }

  std::span<const float> input_row(std::size_t term) const;
  std::span<const float> inner_row(std::size_t node) const;
  std::span<const float> input_weights() const { return input_; }
  std::span<const float> inner_weights() const { return inner_; }

  std::optional<DenseVector> term_vector(std::string_view term) const;
  /// Sum of the vectors of in-vocabulary, non-placeholder tokens; absent if none.
  std::optional<DenseVector> tweet_vector(const TokenSequence& tokens) const;

  /// Hierarchical-softmax p(context | center) for vocabulary indices.
  double probability(std::size_t context, std::size_t center) const;

 private:
  Vocabulary vocab_;
  std::size_t dim_;
  std::vector<float> input_;
  std::vector<float> inner_;
  Instant trained_at_;
  SgnsTrainStats stats_;
};

/// Trains on `docs` (one sentence per tweet). Terms rarer than min_count are
/// removed before windowing; placeholders keep their position but never
/// form pairs. Deterministic for a fixed seed. Throws TrainingError.
SgnsModel train_sgns(std::span<const TokenSequence> docs, const SgnsConfig& config,
                     Instant trained_at = {});

namespace hs {

inline double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double log_sigmoid(double x) {
  if (x >= 0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

/// Visits each inner node on `target`'s path with d log p / d (center . w_node),
/// which is 1 - code - sigmoid(center . w_node).
template <typename T, typename Visit>
void for_each_node_gradient(std::span<const T> center, std::span<const T> inner,
                            const VocabEntry& target, Visit&& visit) {
  const std::size_t dim = center.size();
  for (std::size_t k = 0; k < target.path.size(); ++k) {
    const auto row = inner.subspan(static_cast<std::size_t>(target.path[k]) * dim, dim);
    double x = 0.0;
    for (std::size_t d = 0; d < dim; ++d) x += static_cast<double>(center[d]) * row[d];
    visit(target.path[k], 1.0 - static_cast<double>(target.code[k]) - sigmoid(x));
  }
}

/// log p(target | center) = sum over the path of log sigmoid(+-(center . w)).
template <typename T>
double log_prob(std::span<const T> center, std::span<const T> inner, const VocabEntry& target) {
  const std::size_t dim = center.size();
  double total = 0.0;
  for (std::size_t k = 0; k < target.path.size(); ++k) {
    const auto row = inner.subspan(static_cast<std::size_t>(target.path[k]) * dim, dim);
    double x = 0.0;
    for (std::size_t d = 0; d < dim; ++d) x += static_cast<double>(center[d]) * row[d];
    total += log_sigmoid(target.code[k] ? -x : x);
  }
  return total;
}

/// Adds the gradient of log p(target | center) to `d_center` (dim) and
/// `d_inner` (same layout as `inner`).
template <typename T>
void gradient(std::span<const T> center, std::span<const T> inner, const VocabEntry& target,
              std::span<double> d_center, std::span<double> d_inner) {
  const std::size_t dim = center.size();
  for_each_node_gradient<T>(center, inner, target, [&](std::uint32_t node, double g) {
    for (std::size_t d = 0; d < dim; ++d) {
      d_center[d] += g * static_cast<double>(inner[node * dim + d]);
      d_inner[node * dim + d] += g * static_cast<double>(center[d]);
    }
  });
}

}  // namespace hs
}  // namespace newstrack
