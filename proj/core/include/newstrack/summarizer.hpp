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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "newstrack/preprocess.hpp"
#include "newstrack/tracker.hpp"
#include "newstrack/vecspace.hpp"

namespace newstrack {

struct SummaryConfig {
  /// Number of tweets in the summary.
  std::size_t target_length = 10;
  /// Entries at least this similar to an earlier kept entry are duplicates.
  double dup_threshold = 0.9;

  void validate() const;
};

/// Optional dense representation for duplicate detection. When unset,
/// binary bags of preprocessed tokens are compared.
using TweetVectorizer = std::function<std::optional<DenseVector>(const TokenSequence&)>;

/// Indices of entries that survive duplicate removal, in chronological order.
/// Exact text duplicates of a kept entry are always dropped.
std::vector<std::size_t> dedupe(std::span<const TimelineEntry> entries,
                                const SummaryConfig& config, const Preprocessor& preprocessor,
                                const TweetVectorizer& vectorizer = {});

struct SumBasicResult {
  /// Entry indices in the order SumBasic picked them.
  std::vector<std::size_t> picks;
  /// The same indices sorted chronologically.
  std::vector<std::size_t> summary;
};

/// SumBasic over preprocessed tokens (placeholders never count). Word ties go
/// to the lexicographically smaller token, entry ties to the earlier tweet.
SumBasicResult sumbasic(std::span<const TimelineEntry> entries, const SummaryConfig& config,
                        const Preprocessor& preprocessor);

/// dedupe followed by sumbasic. Returns a copy of `entries` where `selected`
/// marks the summary members.
std::vector<TimelineEntry> summarize(std::span<const TimelineEntry> entries,
                                     const SummaryConfig& config, const Preprocessor& preprocessor,
                                     const TweetVectorizer& vectorizer = {});

/// Mean reference length rounded to the nearest integer, at least 1.
std::size_t target_length_from_references(std::span<const std::size_t> reference_lengths);

}  // namespace newstrack
