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

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>

#include "newstrack/preprocess.hpp"

using namespace newstrack;

namespace {

std::vector<std::string> toks(std::initializer_list<const char*> l) {
  std::vector<std::string> out;
  for (const char* s : l) out.emplace_back(s);
  return out;
}

const std::string kStop(kPlaceholder);

std::string join(const std::vector<std::string>& t) {
  std::string s;
  for (const auto& w : t) {
    if (!s.empty()) s += ' ';
    s += w;
  }
  return s;
}

std::string random_text(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {
      "Fire", "at", "LAX", "via", "@User", "#Yale", "http://t.co/x", "www.example.com", "don't",
      "RT", "the", "lockdown!", "(breaking)", "café", "\u2014", "...", "Mt.", "a,b", "news;", "<stop>",
      "pic.twitter.com/abc", "it's", "U.S.", "#", "@", "x'", "'quoted'", "100%", "e-mail"};
  std::uniform_int_distribution<std::size_t> n(0, 12);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::string s;
  const std::size_t k = n(rng);
  for (std::size_t i = 0; i < k; ++i) {
    if (i) s += (rng() % 5 == 0) ? "  " : " ";
    s += pieces[pick(rng)];
  }
  return s;
}

}  // namespace

TEST_CASE("preprocessing keeps entities, drops URLs and marks stopwords") {
  const Preprocessor pre;
  CHECK(pre("Fire at LAX via @user http://t.co/x").tokens ==
        toks({"fire", kStop.c_str(), "lax", kStop.c_str(), "@user"}));
  CHECK(pre("").tokens.empty());
  CHECK(pre("#Yale lockdown").tokens == toks({"#yale", "lockdown"}));
}

TEST_CASE("without placeholders stopwords are dropped") {
  const Preprocessor pre = Preprocessor().with_placeholders(false);
  CHECK(pre("Fire at LAX via @user http://t.co/x").tokens == toks({"fire", "lax", "@user"}));
}

TEST_CASE("tokenizer splits punctuation and joins apostrophes") {
  CHECK(tokenize("Don't STOP, believing!") == toks({"dont", "stop", "believing"}));
  CHECK(tokenize("see https://t.co/abc and www.x.org now") == toks({"see", "and", "now"}));
  CHECK(tokenize("pic.twitter.com/xyz #tag @who") == toks({"#tag", "@who"}));
  CHECK(tokenize("café" "\u2014" "crème") == toks({"café", "crème"}));
}

TEST_CASE("preprocessing is idempotent") {
  std::mt19937 rng(11);
  const Preprocessor pre;
  for (int i = 0; i < 500; ++i) {
    const std::string text = random_text(rng);
    const auto once = pre(text).tokens;
    const auto twice = pre(join(once)).tokens;
    auto a = once;
    auto b = twice;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK_MESSAGE(a == b, text);
  }
}

TEST_CASE("placeholder mode preserves token count") {
  std::mt19937 rng(12);
  const Preprocessor with;
  const Preprocessor without = with.with_placeholders(false);
  for (int i = 0; i < 500; ++i) {
    const std::string text = random_text(rng);
    const auto raw = tokenize(text);
    const auto kept = with(text).tokens;
    CHECK(kept.size() == raw.size());
    const auto dropped = without(text).tokens;
    const auto stops = std::count(kept.begin(), kept.end(), kStop);
    CHECK(dropped.size() + static_cast<std::size_t>(stops) == kept.size());
    for (const auto& t : kept) CHECK(t.find("://") == std::string::npos);
  }
}

TEST_CASE("language filter") {
  Tweet t;
  t.lang = "en";
  CHECK(lang_filter(t, {"en"}));
  t.lang = "fr";
  CHECK_FALSE(lang_filter(t, {"en"}));
  t.lang.reset();
  CHECK_FALSE(lang_filter(t, {"en"}));
  CHECK(lang_filter(t, {}));
}

TEST_CASE("default stoplist matches the shipped stoplist file") {
  const Stoplist embedded = Stoplist::default_english();
  const Stoplist file = Stoplist::load(NEWSTRACK_STOPLIST);
  CHECK(embedded.sorted_terms() == file.sorted_terms());
  for (const char* w : {"rt", "mt", "via", "the", "at"}) CHECK(embedded.contains(w));
  CHECK_FALSE(embedded.contains("lax"));
}

TEST_CASE("frequent bigrams are joined") {
  std::vector<TokenSequence> corpus;
  for (int i = 0; i < 20; ++i) {
    corpus.push_back({toks({"new", "trade", "agreement", "signed"}), ""});
    corpus.push_back({toks({"trade", "agreement", "talks"}), ""});
  }
  for (int i = 0; i < 20; ++i) corpus.push_back({toks({"signed", "talks", "new"}), ""});
  // trade/agreement scores (40 - 5) / 1600; the next best pair scores 15 / 1600.
  const auto out = concat_phrases(corpus, 5, 0.015);
  CHECK(out[0].tokens == toks({"new", "trade_agreement", "signed"}));
  CHECK(out[1].tokens == toks({"trade_agreement", "talks"}));
}

TEST_CASE("corpora without repeated bigrams are unchanged") {
  std::vector<TokenSequence> corpus = {{toks({"a", "b", "c"}), "1"}, {toks({"d", "e", "f"}), "2"}};
  CHECK(concat_phrases(corpus, 1, 1e-3) == corpus);
}

TEST_CASE("phrase selection agrees with brute-force scoring") {
  std::mt19937 rng(5);
  std::vector<std::string> pool;
  for (int i = 0; i < 40; ++i) pool.push_back("w" + std::to_string(i));
  std::vector<TokenSequence> corpus;
  std::size_t total = 0;
  for (int i = 0; i < 50; ++i) {
    TokenSequence d;
    d.tokens.push_back(pool[rng() % pool.size()]);
    d.tokens.push_back("trade");
    d.tokens.push_back("agreement");
    for (int k = 0; k < 7; ++k) d.tokens.push_back(pool[rng() % pool.size()]);
    total += d.tokens.size();
    corpus.push_back(d);
  }
  CHECK(total == 500);

  std::map<std::string, std::size_t> uni;
  std::map<std::pair<std::string, std::string>, std::size_t> bi;
  for (const auto& d : corpus) {
    for (std::size_t i = 0; i < d.tokens.size(); ++i) {
      ++uni[d.tokens[i]];
      if (i + 1 < d.tokens.size()) ++bi[{d.tokens[i], d.tokens[i + 1]}];
    }
  }
  std::set<std::pair<std::string, std::string>> expected;
  for (const auto& [ab, c] : bi) {
    const double ca = static_cast<double>(uni[ab.first]);
    const double cb = static_cast<double>(uni[ab.second]);
    if (ca < 5 || cb < 5) continue;
    if ((static_cast<double>(c) - 5.0) / (ca * cb) > 1e-3) expected.insert(ab);
  }
  CHECK(expected == std::set<std::pair<std::string, std::string>>{{"trade", "agreement"}});
  CHECK(PhraseTable::learn(corpus, 5, 1e-3).pairs() == expected);
  const auto out = concat_phrases(corpus, 5, 1e-3);
  for (const auto& d : out) CHECK(d.tokens[1] == "trade_agreement");
}

TEST_CASE("phrase score formula") {
  CHECK(phrase_score(50, 50, 50, 5) == doctest::Approx(45.0 / 2500.0).epsilon(1e-12));
  CHECK(phrase_score(3, 10, 10, 5) < 0.0);
}
