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

#include "newstrack/vocabulary.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "newstrack/error.hpp"

namespace newstrack {

Vocabulary Vocabulary::build(std::span<const TokenSequence> docs, std::size_t min_count) {
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& doc : docs) {
    for (const auto& token : doc.tokens) {
      if (!is_placeholder(token)) ++counts[token];
    }
  }
  return from_counts({counts.begin(), counts.end()}, min_count);
}

Vocabulary Vocabulary::from_counts(std::vector<std::pair<std::string, std::uint64_t>> counts,
                                   std::size_t min_count) {
  Vocabulary vocab;
  for (auto& [term, count] : counts) {
    if (count >= min_count && count > 0 && !is_placeholder(term)) {
      vocab.entries_.push_back(VocabEntry{std::move(term), count, {}, {}});
    }
  }
  if (vocab.entries_.empty()) throw TrainingError("vocabulary empty");
  std::sort(vocab.entries_.begin(), vocab.entries_.end(),
            [](const VocabEntry& a, const VocabEntry& b) {
              return std::tie(b.count, a.term) < std::tie(a.count, b.term);
            });
  vocab.index_terms();
  vocab.build_huffman();
  return vocab;
}

Vocabulary Vocabulary::from_terms(std::vector<std::string> terms) {
  Vocabulary vocab;
  for (auto& term : terms) vocab.entries_.push_back(VocabEntry{std::move(term), 0, {}, {}});
  vocab.index_terms();
  if (vocab.index_.size() != vocab.entries_.size()) throw DataError("duplicate vocabulary term");
  return vocab;
}

void Vocabulary::index_terms() {
  index_.clear();
  total_tokens_ = 0;
  for (std::uint32_t i = 0; i < entries_.size(); ++i) {
    index_.emplace(entries_[i].term, i);
    total_tokens_ += entries_[i].count;
  }
}

void Vocabulary::build_huffman() {
  const std::size_t n = entries_.size();
  // Node ids: leaves 0..n-1 are ranked by (count asc, term asc); inner nodes
  // get ids n, n+1, ... in creation order. Ties on weight pop the lower id.
  std::vector<std::uint32_t> by_rank(n);
  for (std::uint32_t i = 0; i < n; ++i) by_rank[i] = i;
  std::sort(by_rank.begin(), by_rank.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::tie(entries_[a].count, entries_[a].term) <
           std::tie(entries_[b].count, entries_[b].term);
  });

  const std::size_t total = 2 * n - 1;
  std::vector<std::uint64_t> weight(total, 0);
  std::vector<std::uint32_t> parent(total, 0);
  std::vector<std::uint8_t> branch(total, 0);
  for (std::uint32_t r = 0; r < n; ++r) weight[r] = entries_[by_rank[r]].count;

  using Item = std::pair<std::uint64_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::uint32_t r = 0; r < n; ++r) heap.emplace(weight[r], r);

  std::uint32_t next = static_cast<std::uint32_t>(n);
  while (heap.size() > 1) {
    const auto [w0, first] = heap.top();
    heap.pop();
    const auto [w1, second] = heap.top();
    heap.pop();
    weight[next] = w0 + w1;
    parent[first] = next;
    parent[second] = next;
    branch[first] = 0;
    branch[second] = 1;
    heap.emplace(weight[next], next);
    ++next;
  }

  // Inner node id n+k maps to output-layer row k; the root is row n-2.
  for (std::uint32_t r = 0; r < n; ++r) {
    auto& entry = entries_[by_rank[r]];
    entry.code.clear();
    entry.path.clear();
    for (std::uint32_t node = r; node != total - 1; node = parent[node]) {
      entry.code.push_back(branch[node]);
      entry.path.push_back(parent[node] - static_cast<std::uint32_t>(n));
    }
    std::reverse(entry.code.begin(), entry.code.end());
    std::reverse(entry.path.begin(), entry.path.end());
  }
  has_tree_ = true;
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view term) const {
  const auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace newstrack
