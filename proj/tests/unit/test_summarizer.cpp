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

#include <random>

#include "newstrack/error.hpp"
#include "newstrack/summarizer.hpp"

using namespace newstrack;

namespace {

const Instant kStart = parse_instant("2021-03-01T12:00:00Z");

TimelineEntry entry(int minute, std::string text) {
  TimelineEntry e;
  e.tweet.id = "t" + std::to_string(minute);
  e.tweet.timestamp = kStart + std::chrono::minutes(minute);
  e.tweet.text = std::move(text);
  return e;
}

std::vector<TimelineEntry> entries(std::initializer_list<const char*> texts) {
  std::vector<TimelineEntry> out;
  int minute = 0;
  for (const char* t : texts) out.push_back(entry(minute++, t));
  return out;
}

SparseBag bag(const Preprocessor& pre, const TimelineEntry& e) {
  return binary_bag(pre.with_placeholders(false)(e.tweet).tokens);
}

double mean_pairwise(const Preprocessor& pre, const std::vector<TimelineEntry>& es) {
  double sum = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      sum += cosine(bag(pre, es[i]), bag(pre, es[j]));
      ++n;
    }
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

}  // namespace

TEST_CASE("dedupe examples") {
  const Preprocessor pre;
  SummaryConfig c;
  const auto twins = entries({"Bridge closed after crash", "Bridge closed after crash"});
  CHECK(dedupe(twins, c, pre) == std::vector<std::size_t>{0});

  const auto distinct = entries({"bridge closed", "storm warning", "markets rally"});
  CHECK(dedupe(distinct, c, pre) == std::vector<std::size_t>{0, 1, 2});

  // "rt" is a stopword, so the bags differ only by "@x": 6 / sqrt(6 * 7) > 0.9.
  const auto retweet = entries({"Rescue teams reach collapsed school in Izmir",
                                "RT @x: Rescue teams reach collapsed school in Izmir"});
  CHECK(dedupe(retweet, c, pre) == std::vector<std::size_t>{0});

  auto shuffled = entries({"later copy", "first"});
  shuffled[0].tweet.timestamp = kStart + std::chrono::hours(1);
  shuffled[1].tweet.text = "later copy";
  CHECK(dedupe(shuffled, c, pre) == std::vector<std::size_t>{1});
}

TEST_CASE("dedupe with a dense vectorizer") {
  const Preprocessor pre;
  SummaryConfig c;
  TweetVectorizer by_length = [](const TokenSequence& t) -> std::optional<DenseVector> {
    if (t.tokens.empty()) return std::nullopt;
    return t.tokens.size() == 2 ? DenseVector{1.0, 0.0} : DenseVector{0.0, 1.0};
  };
  const auto es = entries({"alpha beta", "gamma delta", "epsilon zeta eta theta kappa lambda"});
  CHECK(dedupe(es, c, pre, by_length) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("sumbasic trivial cases") {
  const Preprocessor pre;
  SummaryConfig c;
  c.target_length = 1;
  const auto one = entries({"only tweet"});
  CHECK(sumbasic(one, c, pre).summary == std::vector<std::size_t>{0});
  c.target_length = 5;
  const auto three = entries({"a1 x", "b1 y", "c1 z"});
  CHECK(sumbasic(three, c, pre).summary == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("sumbasic hand trace") {
  // p: quake 3/8, city 2/8, rescue = dogs = lights = 1/8.
  // Pick 1: quake; averages 0.3125, 0.25, 0.25 -> entry 0. quake -> 9/64, city -> 1/16.
  // Pick 2: quake again; entries 1 and 2 tie at 0.1328125 -> earlier entry 1.
  // Pick 3: dogs and lights tie at 1/8 -> "dogs" -> entry 2.
  const Preprocessor pre;
  SummaryConfig c;
  c.target_length = 3;
  const auto es = entries({"quake city", "quake rescue", "quake dogs", "city lights"});
  const auto r = sumbasic(es, c, pre);
  CHECK(r.picks == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.summary == std::vector<std::size_t>{0, 1, 2});

  c.target_length = 2;
  CHECK(sumbasic(es, c, pre).picks == std::vector<std::size_t>{0, 1});
}

TEST_CASE("sumbasic fills with token-less entries last") {
  const Preprocessor pre;
  SummaryConfig c;
  c.target_length = 3;
  const auto es = entries({"the of", "quake city", "and or", "city lights"});
  const auto r = sumbasic(es, c, pre);
  CHECK(r.picks.size() == 3);
  CHECK(r.picks[2] == 0);
  CHECK(r.summary == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("summaries respect length and redundancy bounds") {
  const Preprocessor pre;
  std::mt19937_64 rng(5);
  const std::vector<std::string> words = {"quake", "city", "rescue", "dogs", "lights",
                                          "bridge", "storm", "flood", "blaze", "school"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<TimelineEntry> es;
    const int n = 1 + static_cast<int>(rng() % 25);
    for (int i = 0; i < n; ++i) {
      std::string text;
      for (std::size_t k = 0; k < 1 + rng() % 5; ++k) text += words[rng() % words.size()] + " ";
      es.push_back(entry(static_cast<int>(rng() % 60), text));
    }
    SummaryConfig c;
    c.target_length = 1 + rng() % 8;
    c.dup_threshold = 0.5 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    const auto out = summarize(es, c, pre);
    std::vector<TimelineEntry> chosen;
    for (const auto& e : out) {
      if (e.selected) chosen.push_back(e);
    }
    CHECK(chosen.size() <= c.target_length);
    CHECK_FALSE(chosen.empty());
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      for (std::size_t j = i + 1; j < chosen.size(); ++j) {
        CHECK(cosine(bag(pre, chosen[i]), bag(pre, chosen[j])) < c.dup_threshold);
      }
    }
  }
}

TEST_CASE("summaries are less redundant than redundant input") {
  const Preprocessor pre;
  const auto es = entries({"bridge collapse downtown", "bridge collapse downtown now",
                           "RT @a: bridge collapse downtown", "bridge collapse downtown live",
                           "rescue crews arrive", "rescue crews arrive at bridge",
                           "traffic diverted north", "bridge collapse downtown photos"});
  SummaryConfig c;
  c.target_length = 3;
  c.dup_threshold = 0.8;
  REQUIRE(dedupe(es, c, pre).size() < es.size());
  const auto out = summarize(es, c, pre);
  std::vector<TimelineEntry> chosen;
  for (const auto& e : out) {
    if (e.selected) chosen.push_back(e);
  }
  CHECK(chosen.size() == 3);
  CHECK(mean_pairwise(pre, chosen) <= mean_pairwise(pre, es) + 1e-9);
}

TEST_CASE("summary configuration") {
  SummaryConfig c;
  c.target_length = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = {};
  c.dup_threshold = 1.5;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  const std::vector<std::size_t> lengths = {10, 13};
  CHECK(target_length_from_references(lengths) == 12);
  const std::vector<std::size_t> zero = {0};
  CHECK(target_length_from_references(zero) == 1);
  CHECK_THROWS_AS(target_length_from_references(std::span<const std::size_t>{}), ConfigError);
}
