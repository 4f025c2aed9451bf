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

#include "newstrack/summarizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "newstrack/error.hpp"

namespace newstrack {
namespace {

std::vector<std::size_t> chronological(std::span<const TimelineEntry> entries) {
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return entries[a].tweet.timestamp < entries[b].tweet.timestamp;
  });
  return order;
}

bool earlier(std::span<const TimelineEntry> entries, std::size_t a, std::size_t b) {
  if (entries[a].tweet.timestamp != entries[b].tweet.timestamp) {
    return entries[a].tweet.timestamp < entries[b].tweet.timestamp;
  }
  return a < b;
}

}  // namespace

void SummaryConfig::validate() const {
  if (target_length == 0) throw ConfigError("summary target length must be at least 1");
  if (!(dup_threshold >= 0.0 && dup_threshold <= 1.0)) {
    throw ConfigError("duplicate threshold must lie in [0, 1]");
  }
}

std::vector<std::size_t> dedupe(std::span<const TimelineEntry> entries,
                                const SummaryConfig& config, const Preprocessor& preprocessor,
                                const TweetVectorizer& vectorizer) {
  config.validate();
  const Preprocessor plain = preprocessor.with_placeholders(false);
  struct Kept {
    std::size_t index;
    std::optional<DenseVector> dense;
    SparseBag bag;
  };
  std::vector<Kept> kept;
  std::unordered_set<std::string> texts;
  std::vector<std::size_t> out;

  for (const std::size_t i : chronological(entries)) {
    const auto& text = entries[i].tweet.text;
    if (texts.count(text)) continue;
    const TokenSequence tokens = plain(entries[i].tweet);

    Kept candidate{i, std::nullopt, {}};
    if (vectorizer) {
      candidate.dense = vectorizer(tokens);
    } else {
      candidate.bag = binary_bag(tokens.tokens);
    }
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const Kept& k) {
      double sim = 0.0;
      if (vectorizer) {
        if (k.dense && candidate.dense) sim = cosine(*k.dense, *candidate.dense);
      } else {
        sim = cosine(k.bag, candidate.bag);
      }
      return sim >= config.dup_threshold;
    });
    if (duplicate) continue;
    texts.insert(text);
    out.push_back(i);
    kept.push_back(std::move(candidate));
  }
  return out;
}

SumBasicResult sumbasic(std::span<const TimelineEntry> entries, const SummaryConfig& config,
                        const Preprocessor& preprocessor) {
  config.validate();
  SumBasicResult result;
  if (entries.size() <= config.target_length) {
    result.picks = chronological(entries);
    result.summary = result.picks;
    return result;
  }

  const Preprocessor plain = preprocessor.with_placeholders(false);
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(entries.size());
  std::map<std::string, double> prob;
  double total = 0.0;
  for (const auto& entry : entries) {
    tokens.push_back(plain(entry.tweet).tokens);
    for (const auto& t : tokens.back()) {
      prob[t] += 1.0;
      total += 1.0;
    }
  }
  for (auto& [word, p] : prob) p /= total;

  std::set<std::size_t> remaining;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!tokens[i].empty()) remaining.insert(i);
  }

  while (result.picks.size() < config.target_length && !remaining.empty()) {
    // Highest-probability word still present in a candidate; std::map order
    // makes the first maximum the lexicographically smallest.
    std::set<std::string> available;
    for (const auto i : remaining) available.insert(tokens[i].begin(), tokens[i].end());
    std::string best_word;
    double best_p = -1.0;
    for (const auto& word : available) {
      if (prob[word] > best_p) {
        best_p = prob[word];
        best_word = word;
      }
    }

    std::optional<std::size_t> best;
    double best_avg = -1.0;
    for (const auto i : remaining) {
      const auto& toks = tokens[i];
      if (std::find(toks.begin(), toks.end(), best_word) == toks.end()) continue;
      double sum = 0.0;
      for (const auto& t : toks) sum += prob[t];
      const double avg = sum / static_cast<double>(toks.size());
      if (!best || avg > best_avg || (avg == best_avg && earlier(entries, i, *best))) {
        best = i;
        best_avg = avg;
      }
    }

    result.picks.push_back(*best);
    remaining.erase(*best);
    for (const auto& word : std::set<std::string>(tokens[*best].begin(), tokens[*best].end())) {
      prob[word] *= prob[word];
    }
  }

  // Token-less entries only fill up a summary that ran out of candidates.
  for (const std::size_t i : chronological(entries)) {
    if (result.picks.size() >= config.target_length) break;
    if (tokens[i].empty()) result.picks.push_back(i);
  }

  result.summary = result.picks;
  std::sort(result.summary.begin(), result.summary.end(),
            [&](std::size_t a, std::size_t b) { return earlier(entries, a, b); });
  return result;
}

std::vector<TimelineEntry> summarize(std::span<const TimelineEntry> entries,
                                     const SummaryConfig& config, const Preprocessor& preprocessor,
                                     const TweetVectorizer& vectorizer) {
  const auto kept = dedupe(entries, config, preprocessor, vectorizer);
  std::vector<TimelineEntry> unique;
  unique.reserve(kept.size());
  for (const auto i : kept) unique.push_back(entries[i]);
  const auto chosen = sumbasic(unique, config, preprocessor);

  std::vector<bool> selected(entries.size(), false);
  for (const auto j : chosen.summary) selected[kept[j]] = true;
  std::vector<TimelineEntry> out(entries.begin(), entries.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i].selected = selected[i];
  return out;
}

std::size_t target_length_from_references(std::span<const std::size_t> reference_lengths) {
  if (reference_lengths.empty()) throw ConfigError("no reference lengths");
  const double mean =
      std::accumulate(reference_lengths.begin(), reference_lengths.end(), 0.0) /
      static_cast<double>(reference_lengths.size());
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(mean)));
}

}  // namespace newstrack
