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

#include <benchmark/benchmark.h>

#include <vector>

#include "newstrack/bm25.hpp"
#include "newstrack/model.hpp"
#include "newstrack/randindex.hpp"
#include "newstrack/sgns.hpp"
#include "newstrack/tracker.hpp"
#include "synthetic.hpp"

using namespace newstrack;
using namespace std::chrono_literals;

namespace {

// One day of the synthetic stream, preprocessed: about 720 tweets.
const std::vector<TokenSequence>& window_docs() {
  static const std::vector<TokenSequence> docs = [] {
    testing::DriftStreamOptions o;
    o.span = 24h;
    const auto stream = testing::make_drift_stream(o);
    const Preprocessor pre;
    std::vector<TokenSequence> out;
    for (const auto& t : stream.tweets) out.push_back(pre(t));
    return out;
  }();
  return docs;
}

}  // namespace

static void BM_TrainSgns(benchmark::State& state) {
  SgnsConfig cfg;
  cfg.dim = static_cast<std::size_t>(state.range(0));
  cfg.epochs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(train_sgns(window_docs(), cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(window_docs().size()));
}
BENCHMARK(BM_TrainSgns)->Arg(32)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_TrainRi(benchmark::State& state) {
  RiConfig cfg;
  cfg.variant = state.range(0) == 0 ? RiVariant::Ttri : RiVariant::Trri;
  for (auto _ : state) benchmark::DoNotOptimize(train_ri(window_docs(), cfg));
  state.SetLabel(std::string(to_string(cfg.variant)));
}
BENCHMARK(BM_TrainRi)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Bm25Stats(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_bm25_stats(window_docs()));
}
BENCHMARK(BM_Bm25Stats)->Unit(benchmark::kMicrosecond);

static void BM_QueryScore(benchmark::State& state) {
  const auto kind = static_cast<ModelKind>(state.range(0));
  ModelConfig config;
  config.sgns.dim = 200;
  config.sgns.epochs = 1;
  const auto model = std::make_shared<const RepresentationModel>(
      train_model(kind, window_docs(), config, Instant{}));
  const QueryScorer scorer(model, Preprocessor()("earthquake rescue"));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scorer.score(window_docs()[i++ % window_docs().size()]));
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_QueryScore)
    ->Arg(static_cast<int>(ModelKind::Bm25))
    ->Arg(static_cast<int>(ModelKind::Sgns))
    ->Arg(static_cast<int>(ModelKind::RiTtri));

static void BM_ReplayRi(benchmark::State& state) {
  testing::DriftStreamOptions o;
  o.span = 12h;
  const auto stream = testing::make_drift_stream(o);
  const EventSpec event{"bench", stream.query, stream.origin + 6h, stream.origin + 12h};
  TrackerOptions opts;
  opts.spec.model = ModelKind::RiTtri;
  opts.spec.window_length = 6h;
  for (auto _ : state) benchmark::DoNotOptimize(track(stream.tweets, event, opts));
}
BENCHMARK(BM_ReplayRi)->Unit(benchmark::kMillisecond);
