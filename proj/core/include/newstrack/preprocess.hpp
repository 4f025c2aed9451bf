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
#include <filesystem>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "newstrack/tweet.hpp"

namespace newstrack {

/// Set of terms removed during preprocessing. Entries are normalized the same
/// way as tokens (ASCII lowercase, apostrophes dropped).
class Stoplist {
 public:
  Stoplist() = default;
  explicit Stoplist(std::span<const std::string> terms);

  /// English function words plus Twitter conventions (rt, mt, via, ...).
  static Stoplist default_english();
  /// One term per line, UTF-8. Blank lines are ignored. Throws IoError.
  static Stoplist load(const std::filesystem::path& path);

  bool contains(std::string_view token) const;
  std::size_t size() const { return terms_.size(); }
  std::vector<std::string> sorted_terms() const;

 private:
  std::unordered_set<std::string> terms_;
};

/// Lowercased word, @mention and #hashtag tokens of `text`. URLs and media
/// links are removed; everything else that is not a word character splits
/// tokens. A literal "<stop>" chunk is read back as the placeholder.
std::vector<std::string> tokenize(std::string_view text);

struct PreprocessOptions {
  /// Replace stopwords by kPlaceholder instead of dropping them.
  bool placeholder_mode = true;
};

class Preprocessor {
 public:
  Preprocessor();
  Preprocessor(std::shared_ptr<const Stoplist> stoplist, PreprocessOptions options);

  TokenSequence operator()(const Tweet& tweet) const;
  TokenSequence operator()(std::string_view text, std::string source_id = {}) const;

  const PreprocessOptions& options() const { return options_; }
  const Stoplist& stoplist() const { return *stoplist_; }
  Preprocessor with_placeholders(bool on) const;

 private:
  std::shared_ptr<const Stoplist> stoplist_;
  PreprocessOptions options_;
};

TokenSequence preprocess(const Tweet& tweet, const Stoplist& stoplist, bool placeholder_mode);

/// True iff the tweet's language is in `allowed`. An empty `allowed` set
/// disables the filter. Tweets without language metadata never pass an
/// active filter.
bool lang_filter(const Tweet& tweet, const std::set<std::string>& allowed);

struct PhraseOptions {
  bool enabled = false;
  std::size_t min_count = 5;
  double threshold = 1e-3;
};

/// Association score of an adjacent pair, (count(ab) - min_count) / (count(a) count(b)).
double phrase_score(std::size_t count_ab, std::size_t count_a, std::size_t count_b,
                    std::size_t min_count);

/// Set of adjacent pairs to be joined into single "a_b" tokens.
class PhraseTable {
 public:
  PhraseTable() = default;

  /// Pairs whose phrase_score exceeds `threshold`. Placeholders break
  /// adjacency; pairs where either unigram is rarer than `min_count` are
  /// never selected.
  static PhraseTable learn(std::span<const TokenSequence> corpus, std::size_t min_count,
                           double threshold);

  /// Joins selected pairs scanning left to right; a joined token is not
  /// reconsidered as the left half of the next pair.
  TokenSequence apply(const TokenSequence& seq) const;

  static PhraseTable from_pairs(std::set<std::pair<std::string, std::string>> pairs);

  bool contains(std::string_view a, std::string_view b) const;
  const std::set<std::pair<std::string, std::string>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

/// PhraseTable::learn followed by PhraseTable::apply over the same corpus.
std::vector<TokenSequence> concat_phrases(std::span<const TokenSequence> corpus,
                                          std::size_t min_count, double threshold);

}  // namespace newstrack
