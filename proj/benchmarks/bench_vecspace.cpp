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

#include <random>
#include <string>
#include <vector>

#include "newstrack/randindex.hpp"
#include "newstrack/vecspace.hpp"

using namespace newstrack;

static DenseVector random_dense(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = u(rng);
  return v;
}

static void BM_DenseCosine(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto a = random_dense(rng, dim);
  const auto b = random_dense(rng, dim);
  for (auto _ : state) benchmark::DoNotOptimize(cosine(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DenseCosine)->Arg(32)->Arg(200)->Arg(2500);

static void BM_TernaryCosine(benchmark::State& state) {
  RiConfig cfg;
  const auto a = index_vector("earthquake", cfg);
  const auto b = index_vector("rescue", cfg);
  for (auto _ : state) benchmark::DoNotOptimize(cosine(a, b));
}
BENCHMARK(BM_TernaryCosine);

static void BM_IndexVector(benchmark::State& state) {
  RiConfig cfg;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(index_vector("term" + std::to_string(i++), cfg));
}
BENCHMARK(BM_IndexVector);

static void BM_Compose(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<DenseVector> parts;
  for (int i = 0; i < state.range(0); ++i) parts.push_back(random_dense(rng, 200));
  for (auto _ : state) benchmark::DoNotOptimize(compose(parts));
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(16);
