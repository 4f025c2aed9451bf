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

#include "newstrack/randindex.hpp"

#include <algorithm>
#include <unordered_set>

#include "newstrack/error.hpp"
#include "newstrack/hash.hpp"

namespace newstrack {
namespace {

constexpr std::int32_t kGap = -1;

std::vector<std::vector<std::int32_t>> encode(std::span<const TokenSequence> docs,
                                              const Vocabulary& vocab) {
  std::vector<std::vector<std::int32_t>> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) {
    std::vector<std::int32_t> ids;
    for (const auto& token : doc.tokens) {
      if (is_placeholder(token)) {
        ids.push_back(kGap);
      } else if (const auto id = vocab.find(token)) {
        ids.push_back(static_cast<std::int32_t>(*id));
      }
    }
    out.push_back(std::move(ids));
  }
  return out;
}

std::vector<TernarySparseVector> index_vectors(const Vocabulary& vocab, const RiConfig& config) {
  std::vector<TernarySparseVector> out;
  out.reserve(vocab.size());
  for (const auto& entry : vocab.entries()) out.push_back(index_vector(entry.term, config));
  return out;
}

Vocabulary build_vocab(std::span<const TokenSequence> docs, const RiConfig& config) {
  config.validate();
  if (docs.empty()) throw TrainingError("empty training set");
  return Vocabulary::build(docs, config.min_count);
}

}  // namespace

std::string_view to_string(RiVariant variant) {
  return variant == RiVariant::Ttri ? "ttri" : "trri";
}

void RiConfig::validate() const {
  if (dim == 0) throw ConfigError("RI dimension must be positive");
  if (nonzeros == 0 || nonzeros % 2 != 0) throw ConfigError("RI nonzeros must be even and positive");
  if (nonzeros > dim) throw ConfigError("RI nonzeros exceed dimension");
  if (context_radius == 0) throw ConfigError("RI context radius must be at least 1");
  if (min_count == 0) throw ConfigError("min_count must be at least 1");
}

TernarySparseVector index_vector(std::string_view term, const RiConfig& config) {
  SplitMix64 rng(fnv1a64(term) ^ SplitMix64(config.seed)());
  std::vector<TernarySparseVector::Entry> entries;
  entries.reserve(config.nonzeros);
  std::unordered_set<std::uint32_t> used;
  while (entries.size() < config.nonzeros) {
    const auto pos = static_cast<std::uint32_t>(rng() % config.dim);
    if (!used.insert(pos).second) continue;
    const std::int8_t sign = entries.size() < config.nonzeros / 2 ? 1 : -1;
    entries.push_back({pos, sign});
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  return TernarySparseVector(config.dim, std::move(entries));
}

RiModel::RiModel(Vocabulary vocab, RiConfig config, std::vector<std::int32_t> context,
                 Instant trained_at)
    : vocab_(std::move(vocab)), config_(config), context_(std::move(context)),
      trained_at_(trained_at) {
  config_.validate();
  if (context_.size() != vocab_.size() * config_.dim) {
    throw DataError("context vectors do not match vocabulary");
  }
}

std::span<const std::int32_t> RiModel::context_row(std::size_t term) const {
  return std::span<const std::int32_t>(context_).subspan(term * config_.dim, config_.dim);
}

std::optional<DenseVector> RiModel::term_vector(std::string_view term) const {
  const auto id = vocab_.find(term);
  if (!id) return std::nullopt;
  DenseVector v(config_.dim);
  v.add(context_row(*id));
  return v;
}

std::optional<DenseVector> RiModel::tweet_vector(const TokenSequence& tokens) const {
  std::optional<DenseVector> sum;
  for (const auto& token : tokens.tokens) {
    if (is_placeholder(token)) continue;
    const auto id = vocab_.find(token);
    if (!id) continue;
    if (!sum) sum.emplace(config_.dim);
    sum->add(context_row(*id));
  }
  return sum;
}

RiModel train_ttri(std::span<const TokenSequence> docs, const RiConfig& config,
                   Instant trained_at) {
  Vocabulary vocab = build_vocab(docs, config);
  const auto index = index_vectors(vocab, config);
  const std::size_t dim = config.dim;
  std::vector<std::int32_t> context(vocab.size() * dim, 0);
  const auto radius = static_cast<std::ptrdiff_t>(config.context_radius);

  for (const auto& ids : encode(docs, vocab)) {
    const auto len = static_cast<std::ptrdiff_t>(ids.size());
    for (std::ptrdiff_t i = 0; i < len; ++i) {
      if (ids[i] == kGap) continue;
      const std::span<std::int32_t> row(context.data() + static_cast<std::size_t>(ids[i]) * dim, dim);
      for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(0, i - radius);
           j <= std::min(len - 1, i + radius); ++j) {
        if (j == i || ids[j] == kGap) continue;
        index[static_cast<std::size_t>(ids[j])].add_to<std::int32_t>(row);
      }
    }
  }
  RiConfig stored = config;
  stored.variant = RiVariant::Ttri;
  return RiModel(std::move(vocab), stored, std::move(context), trained_at);
}

RiModel train_trri(std::span<const TokenSequence> docs, const RiConfig& config,
                   Instant trained_at) {
  Vocabulary vocab = build_vocab(docs, config);
  const auto index = index_vectors(vocab, config);
  const std::size_t dim = config.dim;
  std::vector<std::int32_t> context(vocab.size() * dim, 0);
  std::vector<std::int32_t> doc_vector(dim);

  for (auto ids : encode(docs, vocab)) {
    std::erase(ids, kGap);
    if (ids.empty()) continue;
    std::fill(doc_vector.begin(), doc_vector.end(), 0);
    for (const auto id : ids) index[static_cast<std::size_t>(id)].add_to<std::int32_t>(doc_vector);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (const auto id : ids) {
      std::int32_t* row = context.data() + static_cast<std::size_t>(id) * dim;
      for (std::size_t d = 0; d < dim; ++d) row[d] += doc_vector[d];
    }
  }
  RiConfig stored = config;
  stored.variant = RiVariant::Trri;
  return RiModel(std::move(vocab), stored, std::move(context), trained_at);
}

RiModel train_ri(std::span<const TokenSequence> docs, const RiConfig& config,
                 Instant trained_at) {
  return config.variant == RiVariant::Ttri ? train_ttri(docs, config, trained_at)
                                           : train_trri(docs, config, trained_at);
}

}  // namespace newstrack
