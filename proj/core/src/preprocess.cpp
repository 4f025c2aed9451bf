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

#include "newstrack/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>
#include <utility>

namespace newstrack {
namespace {

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  }
  return true;
}

bool is_url(std::string_view chunk) {
  // Leading punctuation such as "(" or a quote may precede the link.
  while (!chunk.empty() && !std::isalnum(static_cast<unsigned char>(chunk.front()))) {
    chunk.remove_prefix(1);
  }
  return starts_with_ci(chunk, "http://") || starts_with_ci(chunk, "https://") ||
         starts_with_ci(chunk, "www.") || starts_with_ci(chunk, "pic.twitter.com/") ||
         chunk.find("://") != std::string_view::npos;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool is_word_byte(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

// UTF-8 encoded U+2000..U+206F (general punctuation) starts with E2 80 or E2 81.
std::size_t general_punctuation_len(std::string_view s, std::size_t i) {
  if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
      (static_cast<unsigned char>(s[i + 1]) == 0x80 ||
       static_cast<unsigned char>(s[i + 1]) == 0x81)) {
    return 3;
  }
  return 0;
}

bool is_apostrophe(std::string_view s, std::size_t i, std::size_t& len) {
  if (s[i] == '\'') {
    len = 1;
    return true;
  }
  // U+2019 RIGHT SINGLE QUOTATION MARK
  if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
      static_cast<unsigned char>(s[i + 1]) == 0x80 &&
      static_cast<unsigned char>(s[i + 2]) == 0x99) {
    len = 3;
    return true;
  }
  return false;
}

void split_chunk(std::string_view chunk, std::vector<std::string>& out) {
  std::string current;
  auto flush = [&] {
    const bool sigil_only = current.size() == 1 && (current[0] == '@' || current[0] == '#');
    if (!current.empty() && !sigil_only) out.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < chunk.size();) {
    const auto c = static_cast<unsigned char>(chunk[i]);
    std::size_t len = 0;
    if (is_apostrophe(chunk, i, len)) {
      // Joins contractions: "don't" -> "dont". Outside a word it separates.
      const bool inside = !current.empty() && i + len < chunk.size() &&
                          is_word_byte(static_cast<unsigned char>(chunk[i + len])) &&
                          general_punctuation_len(chunk, i + len) == 0;
      if (!inside) flush();
      i += len;
      continue;
    }
    if ((len = general_punctuation_len(chunk, i)) != 0) {
      flush();
      i += len;
      continue;
    }
    if (is_word_byte(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if ((c == '@' || c == '#') && current.empty()) {
      current.push_back(static_cast<char>(c));
    } else {
      flush();
    }
    ++i;
  }
  flush();
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (start == i) break;
    const std::string_view chunk = text.substr(start, i - start);
    if (is_url(chunk)) continue;
    if (chunk.size() == kPlaceholder.size() && starts_with_ci(chunk, kPlaceholder)) {
      tokens.emplace_back(kPlaceholder);
      continue;
    }
    split_chunk(chunk, tokens);
  }
  return tokens;
}

Preprocessor::Preprocessor()
    : stoplist_(std::make_shared<const Stoplist>(Stoplist::default_english())) {}

Preprocessor::Preprocessor(std::shared_ptr<const Stoplist> stoplist, PreprocessOptions options)
    : stoplist_(std::move(stoplist)), options_(options) {
  if (!stoplist_) stoplist_ = std::make_shared<const Stoplist>();
}

TokenSequence Preprocessor::operator()(std::string_view text, std::string source_id) const {
  TokenSequence seq;
  seq.source_id = std::move(source_id);
  for (auto& token : tokenize(text)) {
    if (is_placeholder(token) || stoplist_->contains(token)) {
      if (options_.placeholder_mode) seq.tokens.emplace_back(kPlaceholder);
    } else {
      seq.tokens.push_back(std::move(token));
    }
  }
  return seq;
}

TokenSequence Preprocessor::operator()(const Tweet& tweet) const {
  return (*this)(tweet.text, tweet.id);
}

Preprocessor Preprocessor::with_placeholders(bool on) const {
  PreprocessOptions options = options_;
  options.placeholder_mode = on;
  return Preprocessor(stoplist_, options);
}

TokenSequence preprocess(const Tweet& tweet, const Stoplist& stoplist, bool placeholder_mode) {
  return Preprocessor(std::make_shared<const Stoplist>(stoplist),
                      PreprocessOptions{placeholder_mode})(tweet);
}

bool lang_filter(const Tweet& tweet, const std::set<std::string>& allowed) {
  if (allowed.empty()) return true;
  if (!tweet.lang) return false;
  std::string lang = *tweet.lang;
  std::transform(lang.begin(), lang.end(), lang.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return allowed.count(lang) > 0;
}

double phrase_score(std::size_t count_ab, std::size_t count_a, std::size_t count_b,
                    std::size_t min_count) {
  if (count_a == 0 || count_b == 0) return 0.0;
  return (static_cast<double>(count_ab) - static_cast<double>(min_count)) /
         (static_cast<double>(count_a) * static_cast<double>(count_b));
}

PhraseTable PhraseTable::learn(std::span<const TokenSequence> corpus, std::size_t min_count,
                               double threshold) {
  std::unordered_map<std::string, std::size_t> unigrams;
  std::map<std::pair<std::string, std::string>, std::size_t> bigrams;
  for (const auto& seq : corpus) {
    const auto& t = seq.tokens;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (is_placeholder(t[i])) continue;
      ++unigrams[t[i]];
      if (i + 1 < t.size() && !is_placeholder(t[i + 1])) ++bigrams[{t[i], t[i + 1]}];
    }
  }

  PhraseTable table;
  for (const auto& [pair, count] : bigrams) {
    const auto ca = unigrams[pair.first];
    const auto cb = unigrams[pair.second];
    if (ca < min_count || cb < min_count) continue;
    if (phrase_score(count, ca, cb, min_count) > threshold) table.pairs_.insert(pair);
  }
  return table;
}

PhraseTable PhraseTable::from_pairs(std::set<std::pair<std::string, std::string>> pairs) {
  PhraseTable table;
  table.pairs_ = std::move(pairs);
  return table;
}

bool PhraseTable::contains(std::string_view a, std::string_view b) const {
  return pairs_.count({std::string(a), std::string(b)}) > 0;
}

TokenSequence PhraseTable::apply(const TokenSequence& seq) const {
  if (pairs_.empty()) return seq;
  TokenSequence joined;
  joined.source_id = seq.source_id;
  const auto& t = seq.tokens;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i + 1 < t.size() && !is_placeholder(t[i]) && !is_placeholder(t[i + 1]) &&
        contains(t[i], t[i + 1])) {
      joined.tokens.push_back(t[i] + "_" + t[i + 1]);
      ++i;
    } else {
      joined.tokens.push_back(t[i]);
    }
  }
  return joined;
}

std::vector<TokenSequence> concat_phrases(std::span<const TokenSequence> corpus,
                                          std::size_t min_count, double threshold) {
  const auto table = PhraseTable::learn(corpus, min_count, threshold);
  std::vector<TokenSequence> out;
  out.reserve(corpus.size());
  for (const auto& seq : corpus) out.push_back(table.apply(seq));
  return out;
}

}  // namespace newstrack
