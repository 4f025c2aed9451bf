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

#include "newstrack/sgns.hpp"

#include <algorithm>
#include <random>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "newstrack/error.hpp"

namespace newstrack {
namespace {

// Uniform double in [0, 1) from the top 53 bits; portable across standard libraries.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Sentences as vocabulary ids; kGap marks a placeholder slot.
constexpr std::int32_t kGap = -1;

std::vector<std::vector<std::int32_t>> encode(std::span<const TokenSequence> docs,
                                              const Vocabulary& vocab) {
  std::vector<std::vector<std::int32_t>> sentences;
  sentences.reserve(docs.size());
  for (const auto& doc : docs) {
    std::vector<std::int32_t> ids;
    ids.reserve(doc.tokens.size());
    for (const auto& token : doc.tokens) {
      if (is_placeholder(token)) {
        ids.push_back(kGap);
      } else if (const auto id = vocab.find(token)) {
        ids.push_back(static_cast<std::int32_t>(*id));
      }
    }
    sentences.push_back(std::move(ids));
  }
  return sentences;
}

}  // namespace

void SgnsConfig::validate() const {
  if (dim == 0) throw ConfigError("skip-gram dimension must be positive");
  if (max_context == 0) throw ConfigError("skip-gram context must be at least 1");
  if (epochs == 0) throw ConfigError("skip-gram epochs must be at least 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ConfigError("skip-gram learning rate must be positive");
  }
  if (min_count == 0) throw ConfigError("min_count must be at least 1");
}

SgnsModel::SgnsModel(Vocabulary vocab, std::size_t dim, std::vector<float> input,
                     std::vector<float> inner, Instant trained_at, SgnsTrainStats stats)
    : vocab_(std::move(vocab)), dim_(dim), input_(std::move(input)), inner_(std::move(inner)),
      trained_at_(trained_at), stats_(stats) {
  if (dim_ == 0) throw ConfigError("model dimension must be positive");
  if (input_.size() != vocab_.size() * dim_) throw DataError("input weights do not match vocabulary");
  if (!inner_.empty() && inner_.size() != vocab_.inner_nodes() * dim_) {
    throw DataError("output weights do not match vocabulary");
  }
}

std::span<const float> SgnsModel::input_row(std::size_t term) const {
  return std::span<const float>(input_).subspan(term * dim_, dim_);
}

std::span<const float> SgnsModel::inner_row(std::size_t node) const {
  return std::span<const float>(inner_).subspan(node * dim_, dim_);
}

std::optional<DenseVector> SgnsModel::term_vector(std::string_view term) const {
  const auto id = vocab_.find(term);
  if (!id) return std::nullopt;
  DenseVector v(dim_);
  v.add(input_row(*id));
  return v;
}

std::optional<DenseVector> SgnsModel::tweet_vector(const TokenSequence& tokens) const {
  std::optional<DenseVector> sum;
  for (const auto& token : tokens.tokens) {
    if (is_placeholder(token)) continue;
    const auto id = vocab_.find(token);
    if (!id) continue;
    if (!sum) sum.emplace(dim_);
    sum->add(input_row(*id));
  }
  return sum;
}

double SgnsModel::probability(std::size_t context, std::size_t center) const {
  if (!has_output_layer()) throw DataError("model has no output layer");
  return std::exp(hs::log_prob<float>(input_row(center), inner_, vocab_[context]));
}

SgnsModel train_sgns(std::span<const TokenSequence> docs, const SgnsConfig& config,
                     Instant trained_at) {
  config.validate();
  if (docs.empty()) throw TrainingError("empty training set");
  Vocabulary vocab = Vocabulary::build(docs, config.min_count);
  const std::size_t dim = config.dim;
  const std::size_t n = vocab.size();

  std::mt19937_64 rng(config.seed);
  std::vector<float> input(n * dim);
  for (auto& w : input) w = static_cast<float>((unit_uniform(rng) - 0.5) / static_cast<double>(dim));
  std::vector<float> inner(vocab.inner_nodes() * dim, 0.0f);

  const auto sentences = encode(docs, vocab);
  const double alpha0 = config.learning_rate;
  const double total_words = static_cast<double>(config.epochs) *
                             static_cast<double>(std::max<std::uint64_t>(vocab.total_tokens(), 1));
  SgnsTrainStats stats;
  std::vector<double> center_grad(dim);
  const std::span<const float> inner_view(inner);

  // A one-term vocabulary has no inner nodes, so there is nothing to predict.
  const std::size_t epochs = n > 1 ? config.epochs : 0;
  for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
    for (const auto& ids : sentences) {
      const auto len = static_cast<std::ptrdiff_t>(ids.size());
      for (std::ptrdiff_t t = 0; t < len; ++t) {
        if (ids[t] == kGap) continue;
        const double alpha =
            std::max(alpha0 * (1.0 - static_cast<double>(stats.words) / total_words), alpha0 * 1e-4);
        ++stats.words;
        const auto radius = static_cast<std::ptrdiff_t>(1 + rng() % config.max_context);
        const std::size_t center = static_cast<std::size_t>(ids[t]);
        float* center_row = input.data() + center * dim;

        for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(0, t - radius);
             j <= std::min(len - 1, t + radius); ++j) {
          if (j == t || ids[j] == kGap) continue;
          ++stats.pairs;
          std::fill(center_grad.begin(), center_grad.end(), 0.0);
          hs::for_each_node_gradient<float>(
              std::span<const float>(center_row, dim), inner_view, vocab[ids[j]],
              [&](std::uint32_t node, double g) {
                float* row = inner.data() + static_cast<std::size_t>(node) * dim;
                const double step = alpha * g;
                for (std::size_t d = 0; d < dim; ++d) {
                  center_grad[d] += step * row[d];
                  row[d] += static_cast<float>(step * center_row[d]);
                }
              });
          for (std::size_t d = 0; d < dim; ++d) center_row[d] += static_cast<float>(center_grad[d]);
        }
      }
    }
    const auto bad = std::find_if(input.begin(), input.end(), [](float w) { return !std::isfinite(w); });
    if (bad != input.end()) {
      throw TrainingError(fmt::format(
          "non-finite embedding after epoch {} (term '{}', alpha {}, {} pairs)", epoch + 1,
          vocab[static_cast<std::size_t>(bad - input.begin()) / dim].term, alpha0, stats.pairs));
    }
  }
  spdlog::debug("skip-gram: {} terms, {} words, {} pairs", n, stats.words, stats.pairs);
  return SgnsModel(std::move(vocab), dim, std::move(input), std::move(inner), trained_at, stats);
}

}  // namespace newstrack
