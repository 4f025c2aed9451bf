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

#include "newstrack/bm25.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "newstrack/error.hpp"

namespace newstrack {

void Bm25Params::validate() const {
  if (!(k1 >= 0.0) || !std::isfinite(k1)) throw ConfigError("BM25 k1 must be >= 0");
  if (!(b >= 0.0 && b <= 1.0)) throw ConfigError("BM25 b must lie in [0, 1]");
}

Bm25Stats::Bm25Stats(std::size_t doc_count,
                     std::unordered_map<std::string, std::uint32_t> doc_freq, double avgdl,
                     Instant built_at)
    : doc_count_(doc_count), doc_freq_(std::move(doc_freq)), avgdl_(avgdl), built_at_(built_at) {
  if (doc_count_ == 0) throw DataError("BM25 statistics need at least one document");
  if (!(avgdl_ > 0.0)) throw DataError("BM25 average document length must be positive");
  for (const auto& [term, n] : doc_freq_) {
    if (n > doc_count_) throw DataError("document frequency exceeds document count: " + term);
  }
}

std::uint32_t Bm25Stats::doc_freq(std::string_view term) const {
  const auto it = doc_freq_.find(std::string(term));
  return it == doc_freq_.end() ? 0 : it->second;
}

Bm25Stats build_bm25_stats(std::span<const TokenSequence> docs, Instant built_at) {
  if (docs.empty()) throw TrainingError("BM25 statistics need a nonempty snapshot");
  std::unordered_map<std::string, std::uint32_t> doc_freq;
  std::size_t total_length = 0;
  std::unordered_set<std::string_view> seen;
  for (const auto& doc : docs) {
    total_length += doc.tokens.size();
    seen.clear();
    for (const auto& token : doc.tokens) {
      if (!is_placeholder(token) && seen.insert(token).second) ++doc_freq[token];
    }
  }
  if (total_length == 0) throw TrainingError("BM25 snapshot contains no tokens");
  const double avgdl = static_cast<double>(total_length) / static_cast<double>(docs.size());
  return Bm25Stats(docs.size(), std::move(doc_freq), avgdl, built_at);
}

double idf(const Bm25Stats& stats, std::string_view term, bool floor_at_zero) {
  const double n = stats.doc_freq(term);
  const double big_n = static_cast<double>(stats.doc_count());
  const double value = std::log((big_n - n + 0.5) / (n + 0.5));
  return floor_at_zero ? std::max(0.0, value) : value;
}

double bm25_score(const Bm25Stats& stats, const Bm25Params& params,
                  std::span<const std::string> query, const TokenSequence& doc) {
  const double length_ratio = static_cast<double>(doc.tokens.size()) / stats.avgdl();
  const double norm = params.k1 * (1.0 - params.b + params.b * length_ratio);
  double score = 0.0;
  for (const auto& term : query) {
    if (is_placeholder(term)) continue;
    const auto tf = static_cast<double>(std::count(doc.tokens.begin(), doc.tokens.end(), term));
    if (tf == 0.0) continue;
    score += idf(stats, term, params.floor_idf) * (tf * (params.k1 + 1.0)) / (tf + norm);
  }
  return score;
}

std::pair<double, double> bm25_score_bounds(const Bm25Stats& stats, const Bm25Params& params,
                                            std::span<const std::string> query) {
  double low = 0.0;
  double high = 0.0;
  for (const auto& term : query) {
    if (is_placeholder(term)) continue;
    const double w = idf(stats, term, params.floor_idf) * (params.k1 + 1.0);
    (w < 0.0 ? low : high) += w;
  }
  return {low, high};
}

double normalize_bm25(double raw, std::pair<double, double> bounds) {
  const auto [low, high] = bounds;
  if (!(high > low)) return 0.0;
  return std::clamp((raw - low) / (high - low), 0.0, 1.0);
}

}  // namespace newstrack
