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

#include "synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string_view>

#include <fmt/format.h>

namespace newstrack::testing {
namespace {

using Words = std::vector<std::string_view>;

const Words kStoryBefore = {"earthquake", "rescue",  "rubble",  "collapsed", "survivors",
                            "trapped",    "tremor",  "epicenter", "magnitude", "shaking",
                            "buildings",  "damage"};
const Words kStoryAfter = {"tsunami", "wave",     "coastline", "evacuation", "flooding",
                           "harbor",  "seawall",  "shelters",  "boats",      "surge",
                           "inland",  "sirens"};
const std::array<Words, 5> kBackground = {{
    {"match", "goal", "striker", "league", "derby", "penalty", "keeper", "referee", "stadium",
     "fans", "coach", "transfer"},
    {"vote", "ballot", "candidate", "poll", "campaign", "debate", "senate", "turnout", "district",
     "mayor", "party", "rally"},
    {"phone", "launch", "battery", "app", "chip", "startup", "device", "software", "release",
     "beta", "screen", "gadget"},
    {"album", "concert", "tour", "single", "band", "guitar", "lyrics", "stage", "festival",
     "vinyl", "drummer", "chart"},
    {"recipe", "kitchen", "bake", "flour", "oven", "dinner", "spicy", "noodles", "garlic",
     "dessert", "chef", "menu"},
}};
const Words kFiller = {"people", "today", "watch", "live",  "big",   "new",   "time",
                       "look",   "city",  "report", "photos", "video", "story", "morning",
                       "night",  "world", "local", "update"};
const Words kFunction = {"the", "a", "is", "in", "of", "and", "to", "for", "on", "with"};

template <typename Rng>
std::string_view pick(const Words& words, Rng& rng) {
  return words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
}

}  // namespace

DriftStream make_drift_stream(const DriftStreamOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> gap(o.tweets_per_hour / 3600000.0);
  std::uniform_int_distribution<int> topic_words(3, 5);
  std::uniform_int_distribution<int> filler_words(0, 2);

  DriftStream s;
  s.origin = parse_instant("2021-03-01T00:00:00Z");
  s.query = "earthquake rescue";
  const double drift_a = static_cast<double>(o.drift_start.count());
  const double drift_b = static_cast<double>(o.drift_end.count());

  double t = gap(rng);
  std::size_t n = 0;
  while (t < static_cast<double>(o.span.count())) {
    const auto at = s.origin + Duration(static_cast<Duration::rep>(t));
    const bool story = t >= static_cast<double>(o.story_onset.count()) && unit(rng) < o.story_share;
    const double w = std::clamp((t - drift_a) / std::max(1.0, drift_b - drift_a), 0.0, 1.0);
    const Words& background = kBackground[std::uniform_int_distribution<std::size_t>(
        0, kBackground.size() - 1)(rng)];

    std::vector<std::string> words;
    const int k = topic_words(rng);
    for (int i = 0; i < k; ++i) {
      if (story) {
        words.emplace_back(pick(unit(rng) < w ? kStoryAfter : kStoryBefore, rng));
      } else {
        words.emplace_back(pick(background, rng));
      }
    }
    const int f = filler_words(rng);
    for (int i = 0; i < f; ++i) words.emplace_back(pick(kFiller, rng));
    std::shuffle(words.begin(), words.end(), rng);
    // Function words between content words.
    std::string text;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i > 0) {
        text += ' ';
        if (unit(rng) < 0.3) {
          text += pick(kFunction, rng);
          text += ' ';
        }
      }
      text += words[i];
    }
    if (unit(rng) < 0.1) text = fmt::format("RT @user{}: {}", n % 37, text);
    if (unit(rng) < 0.1) text += fmt::format(" http://t.co/x{}", n);

    Tweet tw;
    tw.id = fmt::format("t{:06d}", n);
    tw.timestamp = at;
    tw.author = fmt::format("user{}", std::uniform_int_distribution<int>(0, 199)(rng));
    tw.text = std::move(text);
    tw.lang = unit(rng) < o.foreign_share ? "es" : "en";
    if (story && *tw.lang == "en") s.relevant.insert(tw.id);
    s.tweets.push_back(std::move(tw));
    ++n;
    t += gap(rng);
  }
  return s;
}

Retrieval score_retrieval(const Timeline& timeline, const DriftStream& stream, Instant start,
                          Instant end) {
  Retrieval r;
  for (const auto& tw : stream.tweets) {
    if (tw.timestamp >= start && tw.timestamp <= end && stream.relevant.count(tw.id)) ++r.relevant;
  }
  std::size_t hits = 0;
  for (const auto& e : timeline.entries) {
    ++r.retrieved;
    if (stream.relevant.count(e.tweet.id)) ++hits;
  }
  r.precision = r.retrieved ? static_cast<double>(hits) / static_cast<double>(r.retrieved) : 0.0;
  r.recall = r.relevant ? static_cast<double>(hits) / static_cast<double>(r.relevant) : 0.0;
  if (r.precision + r.recall > 0.0) {
    r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  }
  return r;
}

}  // namespace newstrack::testing
