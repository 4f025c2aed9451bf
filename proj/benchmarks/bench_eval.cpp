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

#include "newstrack/rouge.hpp"
#include "newstrack/summarizer.hpp"
#include "newstrack/stemmer.hpp"

using namespace newstrack;

namespace {

std::vector<std::string> random_texts(std::mt19937_64& rng, std::size_t count) {
  static const std::vector<std::string> words = {
      "police", "responding", "reports", "gunman", "campus", "shelter", "place", "students",
      "lockdown", "officers", "buildings", "searched", "update", "#yale", "@yale", "confirmed"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string text;
    for (int k = 0; k < 12; ++k) text += words[rng() % words.size()] + " ";
    out.push_back(text);
  }
  return out;
}

}  // namespace

static void BM_Evaluate(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto system = random_texts(rng, n);
  const std::vector<std::vector<std::string>> refs = {random_texts(rng, n), random_texts(rng, n)};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(system, refs, EvalConfig{}));
}
BENCHMARK(BM_Evaluate)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_PorterStem(benchmark::State& state) {
  const std::vector<std::string> words = {"responding", "generalizations", "officers",
                                          "lockdown",   "searched",        "relational"};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(porter_stem(words[i++ % words.size()]));
}
BENCHMARK(BM_PorterStem);

static void BM_Summarize(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::vector<TimelineEntry> entries;
  for (const auto& text : random_texts(rng, static_cast<std::size_t>(state.range(0)))) {
    TimelineEntry e;
    e.tweet.id = std::to_string(entries.size());
    e.tweet.timestamp = Instant{} + std::chrono::minutes(entries.size());
    e.tweet.text = text;
    entries.push_back(std::move(e));
  }
  const Preprocessor pre;
  for (auto _ : state) benchmark::DoNotOptimize(summarize(entries, SummaryConfig{}, pre));
}
BENCHMARK(BM_Summarize)->Arg(100)->Arg(500)->Unit(benchmark::kMicrosecond);
