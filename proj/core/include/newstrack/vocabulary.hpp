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
#include <unordered_map>
#include <utility>
#include <vector>

#include "newstrack/tweet.hpp"

namespace newstrack {

/// One vocabulary term with its Huffman code. `path[i]` is the inner node
/// visited at depth i (root first) and `code[i]` the branch taken there.
struct VocabEntry {
  std::string term;
  std::uint64_t count = 0;
  std::vector<std::uint8_t> code;
  std::vector<std::uint32_t> path;
};

/// Terms seen at least `min_count` times, ordered by descending count then
/// term, with a Huffman tree over the counts. Placeholders never enter.
class Vocabulary {
 public:
  Vocabulary() = default;

  /// Throws TrainingError("vocabulary empty") when no term survives.
  static Vocabulary build(std::span<const TokenSequence> docs, std::size_t min_count);
  static Vocabulary from_counts(std::vector<std::pair<std::string, std::uint64_t>> counts,
                                std::size_t min_count);
  /// Vocabulary without a coding tree (e.g. loaded from a snapshot).
  static Vocabulary from_terms(std::vector<std::string> terms);

  std::optional<std::uint32_t> find(std::string_view term) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const VocabEntry& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const VocabEntry> entries() const { return entries_; }

  /// Sum of counts of retained terms.
  std::uint64_t total_tokens() const { return total_tokens_; }
  std::size_t inner_nodes() const { return entries_.empty() ? 0 : entries_.size() - 1; }
  bool has_tree() const { return has_tree_; }

 private:
  void index_terms();
  void build_huffman();

  std::vector<VocabEntry> entries_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::uint64_t total_tokens_ = 0;
  bool has_tree_ = false;
};

}  // namespace newstrack
