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

#include <sstream>

#include "newstrack/error.hpp"
#include "newstrack/model.hpp"
#include "newstrack/snapshot_io.hpp"
#include "synthetic.hpp"

using namespace newstrack;

namespace {

std::vector<TokenSequence> corpus() {
  testing::DriftStreamOptions o;
  o.span = std::chrono::hours(6);
  o.seed = 3;
  const auto stream = testing::make_drift_stream(o);
  const Preprocessor pre;
  std::vector<TokenSequence> docs;
  for (const auto& t : stream.tweets) docs.push_back(pre(t));
  return docs;
}

ModelConfig small_models() {
  ModelConfig c;
  c.sgns.dim = 16;
  c.sgns.epochs = 2;
  c.ri.dim = 128;
  return c;
}

const Instant kTrained = parse_instant("2021-03-01T06:00:00Z");

}  // namespace

TEST_CASE("model kinds parse and print") {
  for (const auto kind : {ModelKind::Bm25, ModelKind::Sgns, ModelKind::RiTtri, ModelKind::RiTrri}) {
    CHECK(parse_model_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_model_kind("lsa"), ConfigError);
  CHECK_FALSE(is_distributional(ModelKind::Bm25));
  CHECK(is_distributional(ModelKind::RiTrri));
}

TEST_CASE("snapshots round-trip with identical scores") {
  const auto docs = corpus();
  const Preprocessor pre;
  const auto query = pre("earthquake rescue");
  for (const auto kind : {ModelKind::Bm25, ModelKind::Sgns, ModelKind::RiTtri, ModelKind::RiTrri}) {
    CAPTURE(to_string(kind));
    const auto model =
        std::make_shared<const RepresentationModel>(train_model(kind, docs, small_models(), kTrained));
    CHECK(model->kind() == kind);
    CHECK(model->trained_at() == kTrained);
    std::stringstream buffer;
    save_model(*model, buffer);
    const auto text = buffer.str();
    const auto loaded = std::make_shared<const RepresentationModel>(load_model(buffer));
    CHECK(loaded->kind() == kind);
    CHECK(loaded->trained_at() == kTrained);
    std::stringstream again;
    save_model(*loaded, again);
    CHECK(again.str() == text);

    const QueryScorer a(model, query);
    const QueryScorer b(loaded, query);
    for (std::size_t i = 0; i < docs.size(); i += 7) {
      const auto sa = a.score(docs[i]);
      const auto sb = b.score(docs[i]);
      REQUIRE(sa.has_value() == sb.has_value());
      if (sa) {
        CHECK(sa->value == sb->value);
        CHECK(sa->raw == sb->raw);
      }
    }
  }
}

TEST_CASE("malformed snapshots are rejected") {
  std::istringstream bad_magic("not-a-snapshot 1\n");
  CHECK_THROWS_AS(load_model(bad_magic), DataError);
  std::istringstream bad_kind("newstrack-snapshot 1\nkind lsa\n");
  CHECK_THROWS_AS(load_model(bad_kind), DataError);
  std::istringstream truncated(
      "newstrack-snapshot 1\nkind sgns\ntrained_at 2021-03-01T00:00:00Z\ndim 2\nvocab 2\n"
      "[rows]\na\t0.5 0.5\n");
  CHECK_THROWS_AS(load_model(truncated), DataError);
  CHECK_THROWS_AS(load_model(std::filesystem::path("/nonexistent/model.snapshot")), IoError);
}

TEST_CASE("query scorer semantics") {
  const auto docs = corpus();
  const Preprocessor pre;
  const auto model = std::make_shared<const RepresentationModel>(
      train_model(ModelKind::RiTtri, docs, small_models(), kTrained));
  const QueryScorer scorer(model, pre("earthquake rescue"));
  CHECK(scorer.query_representable());
  const auto self = scorer.score(pre("earthquake rescue"));
  REQUIRE(self);
  CHECK(self->value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(scorer.score(pre("zzqx wvvk")));

  const QueryScorer unknown(model, pre("zzqx"));
  CHECK_FALSE(unknown.query_representable());
  CHECK_FALSE(unknown.score(pre("earthquake rescue")));

  const auto bm25 = std::make_shared<const RepresentationModel>(
      train_model(ModelKind::Bm25, docs, small_models(), kTrained));
  const QueryScorer lexical(bm25, pre("earthquake rescue"));
  for (std::size_t i = 0; i < docs.size(); i += 5) {
    const auto s = lexical.score(docs[i]);
    REQUIRE(s);
    CHECK(s->value >= 0.0);
    CHECK(s->value <= 1.0);
  }
  CHECK_THROWS_AS(bm25->tweet_vector(docs[0]), std::logic_error);
}

TEST_CASE("phrase tables are applied before representation") {
  std::vector<TokenSequence> docs;
  for (int i = 0; i < 20; ++i) {
    docs.push_back(TokenSequence{{"new", "york", "city", "filler" + std::to_string(i % 3)}, {}});
    docs.push_back(TokenSequence{{"york", "minster", "new", "car"}, {}});
  }
  auto config = small_models();
  config.phrases.enabled = true;
  config.phrases.min_count = 5;
  config.phrases.threshold = 0.005;
  const auto model = train_model(ModelKind::RiTtri, docs, config, kTrained);
  CHECK(model.phrases().contains("new", "york"));
  const auto prepared = model.prepare(TokenSequence{{"new", "york"}, {}});
  REQUIRE(prepared.tokens.size() == 1);
  CHECK(prepared.tokens[0] == "new_york");

  std::stringstream buffer;
  save_model(model, buffer);
  CHECK(load_model(buffer).phrases().pairs() == model.phrases().pairs());
}

TEST_CASE("model slot hands out stable handles") {
  ModelSlot<int> slot;
  CHECK_FALSE(slot.acquire());
  slot.publish(std::make_shared<const int>(1));
  const auto held = slot.acquire();
  slot.publish(std::make_shared<const int>(2));
  CHECK(*held == 1);
  CHECK(*slot.acquire() == 2);
}
