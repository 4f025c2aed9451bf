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
#include <fstream>
#include <random>
#include <sstream>

#include "newstrack/error.hpp"
#include "newstrack/rouge.hpp"
#include "newstrack/stemmer.hpp"
#include "oracles.hpp"

using namespace newstrack;

namespace {

using Tokens = std::vector<std::string>;

Tokens split(const std::string& s) {
  Tokens out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Tokens random_tokens(std::mt19937_64& rng, std::size_t max_len) {
  static const Tokens words = {"a", "b", "c", "d", "e"};
  Tokens t;
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) t.push_back(words[rng() % words.size()]);
  return t;
}

void check_same(const Prf& got, const oracle::Prf& want) {
  CHECK(std::abs(got.precision - want.precision) <= 1e-9);
  CHECK(std::abs(got.recall - want.recall) <= 1e-9);
  CHECK(std::abs(got.f1 - want.f1) <= 1e-9);
}

}  // namespace

TEST_CASE("rouge-n examples") {
  const std::vector<Tokens> refs = {split("police respond to report")};
  const auto r = rouge_n(refs, split("police respond quickly"), 1);
  CHECK(r.recall == doctest::Approx(0.5));
  CHECK(r.precision == doctest::Approx(2.0 / 3.0));
  CHECK(r.f1 == doctest::Approx(4.0 / 7.0));

  const auto same = rouge_n(refs, refs[0], 2);
  CHECK(same.precision == 1.0);
  CHECK(same.recall == 1.0);
  CHECK(same.f1 == 1.0);

  const auto empty = rouge_n(refs, Tokens{}, 1);
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f1 == 0.0);
  CHECK_THROWS_AS(rouge_n(std::span<const Tokens>{}, refs[0], 1), DataError);
}

TEST_CASE("rouge-n pools counts over references") {
  const std::vector<Tokens> refs = {split("a b"), split("a c")};
  const auto r = rouge_n(refs, split("a"), 1);
  CHECK(r.recall == doctest::Approx(2.0 / 4.0));
  CHECK(r.precision == doctest::Approx(2.0 / 2.0));
}

TEST_CASE("rouge-n never counts n-grams across tweets") {
  const std::vector<Sentences> refs = {Sentences{split("a b")}};
  const Sentences split_system = {split("a"), split("b")};
  CHECK(rouge_n(refs, split_system, 2).recall == 0.0);
  const Sentences joined = {split("a b")};
  CHECK(rouge_n(refs, joined, 2).recall == 1.0);
}

TEST_CASE("clipping") {
  const std::vector<Tokens> refs = {split("a b c")};
  const double base = rouge_n(refs, split("a"), 1).recall;
  CHECK(rouge_n(refs, split("a a a a"), 1).recall == base);
}

TEST_CASE("rouge-l examples") {
  const auto r = rouge_l(split("a b c d"), split("a c b d"));
  CHECK(r.recall == doctest::Approx(0.75));
  CHECK(r.precision == doctest::Approx(0.75));
  CHECK(rouge_l(split("a b"), split("a b")).f1 == 1.0);
  CHECK(rouge_l(split("a b"), split("c d")).f1 == 0.0);
  const Sentences ref = {split("a b"), split("c d")};
  const Sentences sys = {split("a"), split("b c d")};
  CHECK(rouge_l(ref, sys).f1 == 1.0);
}

TEST_CASE("skip-bigrams") {
  const auto pairs = skip_bigrams(split("Satoshi got free sushi"), 4);
  CHECK(pairs.size() == 6);
  CHECK(pairs.front() == std::pair<std::string, std::string>{"Satoshi", "got"});
  CHECK(skip_bigrams(split("alone"), 4).empty());
  CHECK(skip_bigrams(split("a b c d e f g"), 0).size() == 6);

  const auto single = rouge_su(split("alone"), split("alone"), 4, true);
  CHECK(single.f1 == 1.0);
  CHECK(rouge_su(split("alone"), split("alone"), 4, false).f1 == 0.0);
}

TEST_CASE("scores equal brute-force enumeration") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ref = random_tokens(rng, 10);
    const auto sys = random_tokens(rng, 10);
    const std::vector<Tokens> refs = {ref};
    for (int n = 1; n <= 3; ++n) check_same(rouge_n(refs, sys, n), oracle::rouge_n(ref, sys, n));
    check_same(rouge_l(ref, sys), oracle::rouge_l(ref, sys));
    const auto r8 = Tokens(ref.begin(), ref.begin() + std::min<std::size_t>(8, ref.size()));
    const auto s8 = Tokens(sys.begin(), sys.begin() + std::min<std::size_t>(8, sys.size()));
    for (const int skip : {0, 1, 4}) {
      for (const bool uni : {true, false}) {
        check_same(rouge_su(r8, s8, skip, uni), oracle::rouge_su(r8, s8, skip, uni));
      }
    }
  }
}

TEST_CASE("every variant scores a text against itself as perfect") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = random_tokens(rng, 10);
    t.push_back("z");
    const std::vector<Tokens> refs = {t};
    CHECK(rouge_n(refs, t, 1).f1 == doctest::Approx(1.0));
    CHECK(rouge_l(t, t).f1 == doctest::Approx(1.0));
    CHECK(rouge_su(t, t, 4).f1 == doctest::Approx(1.0));
  }
}

TEST_CASE("stemming never lowers recall on stem variants") {
  const std::vector<std::pair<std::string, std::string>> fixtures = {
      {"rescuers are rescuing survivors", "rescue of survivor"},
      {"flooding closed roads", "floods close road"},
      {"police arrested two men", "police arrest men"},
      {"earthquakes shook the cities", "earthquake shakes city"},
      {"the running and jumping", "runs jumps"}};
  EvalConfig stem;
  EvalConfig plain;
  plain.stemming = false;
  for (const auto& [ref, sys] : fixtures) {
    for (const auto& name : {"ROUGE-1", "ROUGE-2", "ROUGE-L", "ROUGE-SU4"}) {
      const auto with = evaluate({sys}, {{ref}}, stem).find(name)->score.recall;
      const auto without = evaluate({sys}, {{ref}}, plain).find(name)->score.recall;
      CHECK(with >= without);
    }
  }
}

TEST_CASE("evaluation tokens") {
  EvalConfig c;
  CHECK(eval_tokens("Rescuers RUNNING @Rescuers #Floods http://t.co/x", c) ==
        Tokens{"rescuer", "run", "@rescuers", "#floods"});
  c.stopword_removal = true;
  CHECK(eval_tokens("the rescue of the city", c) == Tokens{"rescu", "citi"});
}

TEST_CASE("diversity ratio") {
  const Sentences varied = {split("a b"), split("a c"), split("d")};
  const std::vector<Sentences> same = {varied};
  CHECK(diversity_ratio(varied, same) == doctest::Approx(1.0));

  const Sentences copies = {split("a b"), split("a b"), split("a b")};
  CHECK(diversity_ratio(copies, same) < 1.0);

  // Pairwise cosines: system 1/2, 0, 0; reference 2/sqrt(6), 1/2, 2/sqrt(6).
  const std::vector<Sentences> ref = {Sentences{split("a b"), split("a b c"), split("b c")}};
  const double expected = ((4.0 / std::sqrt(6.0) + 0.5) / 3.0) / (0.5 / 3.0);
  CHECK(diversity_ratio(varied, ref) == doctest::Approx(expected).epsilon(1e-12));

  const Sentences disjoint = {split("a"), split("b")};
  CHECK(std::isinf(diversity_ratio(disjoint, same)));
  const std::vector<Sentences> disjoint_ref = {disjoint};
  CHECK(diversity_ratio(disjoint, disjoint_ref) == 1.0);
  CHECK_THROWS_AS(diversity_ratio(Sentences{split("a")}, same), DataError);
}

TEST_CASE("evaluate report") {
  const std::vector<std::string> system = {"Police respond to shooting", "Roads closed downtown"};
  const std::vector<std::vector<std::string>> refs = {
      {"Police responding to a shooting", "Downtown roads are closed"},
      {"Shots fired near campus", "Police on scene"}};
  const auto report = evaluate(system, refs, EvalConfig{});
  CHECK(report.reference_count == 2);
  CHECK(report.variants.size() == 4);
  for (const auto& v : report.variants) {
    CHECK(v.score.f1 >= 0.0);
    CHECK(v.score.f1 <= 1.0);
  }
  const auto* su = report.find("ROUGE-SU4");
  REQUIRE(su);
  CHECK(su->per_reference.size() == 2);
  CHECK(su->score.f1 == std::max(su->per_reference[0].f1, su->per_reference[1].f1));
  REQUIRE(report.diversity);
  const auto json = report_to_json(report, "e1");
  CHECK(json["event"] == "e1");
  CHECK(format_report_table(report, "e1").find("ROUGE-L") != std::string::npos);

  EvalConfig literal;
  literal.su_include_unigrams = false;
  CHECK(evaluate(system, refs, literal).find("ROUGE-S4"));
  CHECK_THROWS_AS(evaluate(system, {}, EvalConfig{}), DataError);
  EvalConfig bad;
  bad.su_skip_distance = -1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("porter stemmer matches the reference table") {
  std::ifstream in(NEWSTRACK_FIXTURES "/porter_reference.tsv");
  REQUIRE(in);
  std::size_t checked = 0;
  for (std::string line; std::getline(in, line);) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    const auto word = line.substr(0, tab);
    const auto stem = line.substr(tab + 1);
    CHECK_MESSAGE(porter_stem(word) == stem, word);
    ++checked;
  }
  CHECK(checked >= 1000);
  CHECK(porter_stem("caresses") == "caress");
  CHECK(porter_stem("ponies") == "poni");
  CHECK(porter_stem("relational") == "relat");
  CHECK(porter_stem("") == "");
}
