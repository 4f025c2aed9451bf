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

#include <cmath>
#include <random>
#include <set>

#include "newstrack/error.hpp"
#include "newstrack/sgns.hpp"
#include "oracles.hpp"

using namespace newstrack;

namespace {

TokenSequence doc(std::initializer_list<const char*> l) {
  TokenSequence d;
  for (const char* s : l) d.tokens.emplace_back(s);
  return d;
}

std::size_t code_length(const Vocabulary& v, std::string_view term) {
  return v[*v.find(term)].code.size();
}

Vocabulary random_vocab(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  for (std::size_t i = 0; i < n; ++i) counts.emplace_back("t" + std::to_string(i), 1 + rng() % 20);
  return Vocabulary::from_counts(counts, 1);
}

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> w(n);
  for (auto& x : w) x = u(rng);
  return w;
}

}  // namespace

TEST_CASE("vocabulary drops rare terms and placeholders") {
  const std::vector<TokenSequence> docs = {doc({"a", "a", "b", "<stop>", "<stop>"})};
  const auto v = Vocabulary::build(docs, 2);
  CHECK(v.size() == 1);
  CHECK(v.find("a"));
  CHECK_FALSE(v.find("b"));
  CHECK_FALSE(v.find("<stop>"));
  CHECK(v.total_tokens() == 2);
  const std::vector<TokenSequence> rare = {doc({"x", "y"})};
  CHECK_THROWS_AS(Vocabulary::build(rare, 2), TrainingError);
}

TEST_CASE("huffman code lengths") {
  const auto uniform = Vocabulary::from_counts({{"a", 3}, {"b", 3}, {"c", 3}, {"d", 3}}, 1);
  for (const char* t : {"a", "b", "c", "d"}) CHECK(code_length(uniform, t) == 2);

  const auto skewed = Vocabulary::from_counts({{"a", 4}, {"b", 2}, {"c", 1}, {"d", 2}}, 2);
  CHECK(skewed.size() == 3);
  CHECK(code_length(skewed, "a") == 1);
  CHECK(code_length(skewed, "b") == 2);
  CHECK(code_length(skewed, "d") == 2);
  CHECK(skewed.inner_nodes() == 2);
}

TEST_CASE("huffman codes are optimal and prefix free") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const auto v = random_vocab(rng, n);
    std::uint64_t cost = 0;
    std::vector<std::uint64_t> weights;
    std::set<std::vector<std::uint8_t>> codes;
    for (const auto& e : v.entries()) {
      cost += e.count * e.code.size();
      weights.push_back(e.count);
      CHECK(e.code.size() == e.path.size());
      for (const auto node : e.path) CHECK(node < v.inner_nodes());
      codes.insert(e.code);
    }
    CHECK(cost == oracle::optimal_code_cost(weights));
    CHECK(codes.size() == v.size());
    for (const auto& a : codes) {
      for (const auto& b : codes) {
        if (a == b || a.size() > b.size()) continue;
        CHECK_FALSE(std::equal(a.begin(), a.end(), b.begin()));
      }
    }
  }
}

TEST_CASE("hierarchical softmax sums to one") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 31;
    const std::size_t dim = 1 + rng() % 12;
    const auto vocab = random_vocab(rng, n);
    const auto center = random_weights(rng, dim, 2.0);
    const auto inner = random_weights(rng, vocab.inner_nodes() * dim, 2.0);
    double total = 0.0;
    for (const auto& e : vocab.entries()) {
      total += std::exp(hs::log_prob<double>(center, inner, e));
    }
    CHECK(std::abs(total - 1.0) <= 1e-6);
  }
}

TEST_CASE("analytic gradients match finite differences") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto vocab = random_vocab(rng, 2 + rng() % 31);
    const std::size_t dim = 1 + rng() % 8;
    auto center = random_weights(rng, dim, 1.0);
    auto inner = random_weights(rng, vocab.inner_nodes() * dim, 1.0);
    const auto& target = vocab[rng() % vocab.size()];
    std::vector<double> dc(dim, 0.0);
    std::vector<double> di(inner.size(), 0.0);
    hs::gradient<double>(center, inner, target, dc, di);

    const double h = 1e-5;
    auto fd = [&](std::vector<double>& params, std::size_t i) {
      const double keep = params[i];
      params[i] = keep + h;
      const double up = hs::log_prob<double>(center, inner, target);
      params[i] = keep - h;
      const double down = hs::log_prob<double>(center, inner, target);
      params[i] = keep;
      return (up - down) / (2 * h);
    };
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double n = fd(center, i);
      diff += (n - dc[i]) * (n - dc[i]);
      scale += n * n + dc[i] * dc[i];
    }
    for (std::size_t i = 0; i < inner.size(); ++i) {
      const double n = fd(inner, i);
      diff += (n - di[i]) * (n - di[i]);
      scale += n * n + di[i] * di[i];
    }
    CHECK(std::sqrt(diff) <= 1e-4 * std::max(std::sqrt(scale), 1e-12));
  }
}

namespace {

std::vector<TokenSequence> adjacency_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> filler;
  std::vector<std::string> topic;
  for (int i = 0; i < 40; ++i) filler.push_back("f" + std::to_string(i));
  for (int i = 0; i < 10; ++i) topic.push_back("g" + std::to_string(i));
  std::vector<TokenSequence> docs;
  std::size_t tokens = 0;
  while (tokens < 10000) {
    TokenSequence d;
    const bool story = rng() % 3 == 0;
    const auto& words = story ? topic : filler;
    for (int k = 0; k < 8; ++k) d.tokens.push_back(words[rng() % words.size()]);
    if (story) {
      const auto at = rng() % 7;
      d.tokens[at] = "alpha";
      d.tokens[at + 1] = "beta";
    }
    tokens += d.tokens.size();
    docs.push_back(std::move(d));
  }
  return docs;
}

}  // namespace

TEST_CASE("adjacent tokens end up closer than unrelated ones") {
  const auto docs = adjacency_corpus(1);
  SgnsConfig cfg;
  cfg.dim = 24;
  cfg.epochs = 5;
  cfg.max_context = 2;
  const auto m = train_sgns(docs, cfg);
  const auto a = *m.term_vector("alpha");
  const double ab = cosine(a, *m.term_vector("beta"));
  for (int i = 0; i < 40; ++i) {
    CHECK(ab > cosine(a, *m.term_vector("f" + std::to_string(i))));
  }
}

TEST_CASE("tokens with identical contexts are closer than tokens with disjoint contexts") {
  std::mt19937_64 rng(2);
  std::vector<TokenSequence> docs;
  const std::vector<std::string> ctx1 = {"p", "q", "r", "s"};
  const std::vector<std::string> ctx2 = {"k", "l", "m", "n"};
  for (int i = 0; i < 1500; ++i) {
    TokenSequence d;
    const auto pick = rng() % 3;
    const auto& ctx = pick == 2 ? ctx2 : ctx1;
    d.tokens = {ctx[rng() % 4], pick == 0 ? "x" : pick == 1 ? "y" : "z", ctx[rng() % 4]};
    docs.push_back(d);
  }
  SgnsConfig cfg;
  cfg.dim = 16;
  cfg.epochs = 5;
  cfg.max_context = 1;
  const auto m = train_sgns(docs, cfg);
  const auto x = *m.term_vector("x");
  CHECK(cosine(x, *m.term_vector("y")) >= cosine(x, *m.term_vector("z")));
}

TEST_CASE("training is deterministic for a seed") {
  const auto docs = adjacency_corpus(3);
  SgnsConfig cfg;
  cfg.dim = 8;
  cfg.epochs = 2;
  const auto a = train_sgns(docs, cfg);
  const auto b = train_sgns(docs, cfg);
  CHECK(std::equal(a.input_weights().begin(), a.input_weights().end(),
                   b.input_weights().begin(), b.input_weights().end()));
  CHECK(std::equal(a.inner_weights().begin(), a.inner_weights().end(),
                   b.inner_weights().begin(), b.inner_weights().end()));
  cfg.seed = 2;
  const auto c = train_sgns(docs, cfg);
  CHECK_FALSE(std::equal(a.input_weights().begin(), a.input_weights().end(),
                         c.input_weights().begin(), c.input_weights().end()));
}

TEST_CASE("a single repeated token forms no pairs") {
  const std::vector<TokenSequence> docs = {doc({"a", "a", "<stop>", "a"}), doc({"a"})};
  SgnsConfig cfg;
  cfg.dim = 6;
  cfg.epochs = 1;
  const auto one = train_sgns(docs, cfg);
  cfg.epochs = 4;
  const auto four = train_sgns(docs, cfg);
  CHECK(one.stats().pairs == 0);
  CHECK(four.stats().pairs == 0);
  CHECK(std::equal(one.input_weights().begin(), one.input_weights().end(),
                   four.input_weights().begin(), four.input_weights().end()));
  for (const float x : one.input_weights()) CHECK(std::abs(x) < 0.5f / 6.0f);
}

TEST_CASE("placeholders keep distance but never pair") {
  // With radius 1 the placeholder separates a and b completely.
  const std::vector<TokenSequence> docs = {doc({"a", "<stop>", "b"}), doc({"b", "<stop>", "a"})};
  SgnsConfig cfg;
  cfg.dim = 4;
  cfg.epochs = 3;
  cfg.max_context = 1;
  CHECK(train_sgns(docs, cfg).stats().pairs == 0);
  cfg.max_context = 2;
  CHECK(train_sgns(docs, cfg).stats().pairs > 0);
}

TEST_CASE("term and tweet vectors") {
  std::vector<TokenSequence> docs;
  for (int i = 0; i < 5; ++i) {
    docs.push_back(TokenSequence{{"@user", "fire", "<stop>", "lax", "rare" + std::to_string(i)}, ""});
  }
  SgnsConfig cfg;
  cfg.dim = 5;
  cfg.epochs = 2;
  const auto m = train_sgns(docs, cfg);
  REQUIRE(m.term_vector("@user"));
  CHECK_FALSE(m.term_vector("unknown"));
  CHECK_FALSE(m.tweet_vector(doc({"nothing", "here", "<stop>"})));
  CHECK(*m.tweet_vector(doc({"fire"})) == *m.term_vector("fire"));
  const auto sum = *m.tweet_vector(doc({"fire", "<stop>", "lax", "zzz"}));
  const auto f = *m.term_vector("fire");
  const auto l = *m.term_vector("lax");
  for (std::size_t d = 0; d < cfg.dim; ++d) CHECK(sum[d] == f[d] + l[d]);
}

TEST_CASE("model probabilities sum to one after training") {
  const auto docs = adjacency_corpus(5);
  SgnsConfig cfg;
  cfg.dim = 10;
  cfg.epochs = 1;
  const auto m = train_sgns(docs, cfg);
  REQUIRE(m.vocab().size() <= 52);
  for (std::size_t c = 0; c < m.vocab().size(); c += 7) {
    double total = 0.0;
    for (std::size_t v = 0; v < m.vocab().size(); ++v) total += m.probability(v, c);
    CHECK(std::abs(total - 1.0) <= 1e-6);
  }
}

TEST_CASE("invalid configurations are rejected") {
  SgnsConfig cfg;
  cfg.dim = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.learning_rate = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.max_context = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
