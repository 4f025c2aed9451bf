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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "newstrack/time.hpp"
#include "newstrack/tweet.hpp"

namespace newstrack {

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
  /// Clamp negative IDF values (terms in more than half the documents) to 0.
  bool floor_idf = false;

  void validate() const;
};

/// Collection statistics of one window snapshot. Immutable once built.
class Bm25Stats {
 public:
  Bm25Stats(std::size_t doc_count, std::unordered_map<std::string, std::uint32_t> doc_freq,
            double avgdl, Instant built_at);

  std::size_t doc_count() const { return doc_count_; }
  /// n(t): documents containing `term`; 0 for unseen terms.
  std::uint32_t doc_freq(std::string_view term) const;
  double avgdl() const { return avgdl_; }
  Instant built_at() const { return built_at_; }
  const std::unordered_map<std::string, std::uint32_t>& doc_freqs() const { return doc_freq_; }

 private:
  std::size_t doc_count_;
  std::unordered_map<std::string, std::uint32_t> doc_freq_;
  double avgdl_;
  Instant built_at_;
};

/// Document lengths count every token including placeholders; document
/// frequencies ignore placeholders. Throws TrainingError on an empty
/// snapshot or one without any tokens.
Bm25Stats build_bm25_stats(std::span<const TokenSequence> docs, Instant built_at = {});

/// ln((N - n + 0.5) / (n + 0.5)).
double idf(const Bm25Stats& stats, std::string_view term, bool floor_at_zero = false);

/// Okapi BM25 of `doc` for the query terms (duplicates count twice).
double bm25_score(const Bm25Stats& stats, const Bm25Params& params,
                  std::span<const std::string> query, const TokenSequence& doc);

/// Attainable score range for `query` under `stats`: a term with positive
/// IDF contributes at most IDF (k1 + 1), one with negative IDF at least that.
std::pair<double, double> bm25_score_bounds(const Bm25Stats& stats, const Bm25Params& params,
                                            std::span<const std::string> query);

/// Min-max maps a raw score into [0, 1] using bm25_score_bounds.
double normalize_bm25(double raw, std::pair<double, double> bounds);

}  // namespace newstrack
