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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newstrack/time.hpp"
#include "newstrack/tweet.hpp"
#include "newstrack/vecspace.hpp"
#include "newstrack/vocabulary.hpp"

namespace newstrack {

enum class RiVariant { Ttri, Trri };

std::string_view to_string(RiVariant variant);

struct RiConfig {
  std::size_t dim = 2500;
  /// Nonzero entries per index vector, half +1 and half -1.
  std::size_t nonzeros = 8;
  std::size_t context_radius = 5;
  RiVariant variant = RiVariant::Ttri;
  std::size_t min_count = 2;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Elemental vector of `term`, a pure function of (seed, dim, nonzeros, term).
TernarySparseVector index_vector(std::string_view term, const RiConfig& config);

/// Random Indexing word space: per-term integer context vectors (rows of F').
class RiModel {
 public:
  RiModel(Vocabulary vocab, RiConfig config, std::vector<std::int32_t> context,
          Instant trained_at);

  const Vocabulary& vocab() const { return vocab_; }
  const RiConfig& config() const { return config_; }
  RiVariant variant() const { return config_.variant; }
  std::size_t dim() const { return config_.dim; }
  Instant trained_at() const { return trained_at_; }

  std::span<const std::int32_t> context_row(std::size_t term) const;
  std::span<const std::int32_t> context_weights() const { return context_; }
  TernarySparseVector index_vector_of(std::string_view term) const {
    return index_vector(term, config_);
  }

  std::optional<DenseVector> term_vector(std::string_view term) const;
  std::optional<DenseVector> tweet_vector(const TokenSequence& tokens) const;

 private:
  Vocabulary vocab_;
  RiConfig config_;
  std::vector<std::int32_t> context_;
  Instant trained_at_;
};

/// Term-term RI: every occurrence adds the index vectors of the terms within
/// `context_radius` positions in the same tweet. Placeholders count for
/// distance but contribute nothing.
RiModel train_ttri(std::span<const TokenSequence> docs, const RiConfig& config,
                   Instant trained_at = {});

/// Term-based reflective RI: document vector = sum of the index vectors of
/// its token occurrences; term vector = sum of the vectors of the documents
/// containing the term (once per document).
RiModel train_trri(std::span<const TokenSequence> docs, const RiConfig& config,
                   Instant trained_at = {});

/// Dispatches on config.variant.
RiModel train_ri(std::span<const TokenSequence> docs, const RiConfig& config,
                 Instant trained_at = {});

}  // namespace newstrack
