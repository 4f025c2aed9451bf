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

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newstrack/model.hpp"
#include "newstrack/preprocess.hpp"
#include "newstrack/time.hpp"
#include "newstrack/tweet.hpp"
#include "newstrack/window.hpp"

namespace newstrack {

enum class TrackingMode { Adaptive, Static };

std::string_view to_string(TrackingMode mode);
TrackingMode parse_tracking_mode(std::string_view name);

/// Seed query. Never modified while tracking; only its representation
/// changes when the model is retrained.
struct Query {
  std::string text;
  TokenSequence tokens;
  Instant created_at{};
};

/// Throws ConfigError when `text` has no content terms after preprocessing.
Query make_query(std::string text, Instant created_at, const Preprocessor& preprocessor);

struct TrackerSpec {
  ModelKind model = ModelKind::Sgns;
  TrackingMode mode = TrackingMode::Adaptive;
  /// Inclusion threshold on the similarity. At 0 every tweet with a
  /// computable similarity is included.
  double threshold = 0.5;
  Duration window_length = std::chrono::hours(24);
  Duration refresh_rate = std::chrono::minutes(15);
  /// Static mode training span before the event start; defaults to window_length.
  std::optional<Duration> static_train_span;
  /// Adaptive mode only; with refresh off the initial model is kept.
  bool refresh_enabled = true;
  Duration reorder_slack = std::chrono::seconds(60);

  void validate() const;
  Duration train_span() const { return static_train_span.value_or(window_length); }
};

struct EventSpec {
  std::string id;
  std::string query;
  Instant start{};
  /// Inclusive end of the event period.
  Instant end{};
};

struct TrackerOptions {
  TrackerSpec spec;
  ModelConfig models;
  PreprocessOptions preprocess;
  std::shared_ptr<const Stoplist> stoplist;
  /// Language filter; empty disables it.
  std::set<std::string> languages{"en"};
};

struct TimelineEntry {
  Tweet tweet;
  double score = 0.0;
  double raw_score = 0.0;
  Instant model_trained_at{};
  bool selected = true;
};

struct Timeline {
  std::string event_id;
  Query query;
  ModelKind model = ModelKind::Sgns;
  TrackingMode mode = TrackingMode::Adaptive;
  Instant start{};
  Instant end{};
  std::vector<TimelineEntry> entries;
};

struct RefreshRecord {
  Instant at{};
  std::size_t docs = 0;
  bool ok = false;
  bool contained = true;
  std::string note;
};

struct TrackStats {
  std::size_t seen = 0;
  std::size_t filtered_lang = 0;
  std::size_t dropped_late = 0;
  std::size_t in_period = 0;
  std::size_t scored = 0;
  std::size_t unrepresentable = 0;
  std::size_t no_model = 0;
  std::size_t included = 0;
  std::size_t refresh_failures = 0;
  std::size_t containment_violations = 0;
  std::size_t staleness_violations = 0;
  Duration max_staleness{0};
  std::vector<RefreshRecord> refreshes;
};

/// Produces a model from a window snapshot; the default trains directly.
/// Supplied by callers that cache snapshots on disk.
using ModelFactory = std::function<std::shared_ptr<const RepresentationModel>(
    ModelKind, const WindowSnapshot&, const ModelConfig&)>;

ModelFactory default_model_factory();

/// Replays a stream for one event. Feed every stream tweet in file order with
/// observe(); tweets before the event feed the training window, tweets in
/// [start, end] are scored against the model current at their arrival.
/// Logical time comes from tweet timestamps, so training is instantaneous.
class Tracker {
 public:
  Tracker(EventSpec event, TrackerOptions options,
          std::shared_ptr<const RepresentationModel> pretrained = nullptr,
          ModelFactory factory = default_model_factory());

  void observe(const Tweet& tweet);
  /// Trains a pending static model if needed and returns the timeline.
  Timeline finish();

  const TrackStats& stats() const { return stats_; }
  const Query& query() const { return query_; }
  /// Model serving at this moment (may be null before the first refresh).
  std::shared_ptr<const QueryScorer> current() const { return slot_.acquire(); }

 private:
  void refresh(Instant at);
  void train_static();
  void publish(std::shared_ptr<const RepresentationModel> model);
  void score(const Tweet& tweet);

  EventSpec event_;
  TrackerOptions options_;
  Preprocessor preprocessor_;
  Query query_;
  ModelFactory factory_;
  SlidingWindow window_;
  std::vector<TokenSequence> static_docs_;
  std::vector<Instant> static_times_;
  bool static_trained_ = false;
  ModelSlot<QueryScorer> slot_;
  std::vector<TimelineEntry> entries_;
  TrackStats stats_;
};

struct TrackResult {
  Timeline timeline;
  TrackStats stats;
};

TrackResult track(std::span<const Tweet> stream, const EventSpec& event,
                  const TrackerOptions& options,
                  std::shared_ptr<const RepresentationModel> pretrained = nullptr,
                  ModelFactory factory = default_model_factory());

}  // namespace newstrack
