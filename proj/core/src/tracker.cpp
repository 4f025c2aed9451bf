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

#include "newstrack/tracker.hpp"

#include <algorithm>
#include <cmath>

#include <spdlog/spdlog.h>

#include "newstrack/error.hpp"

namespace newstrack {
namespace {

Preprocessor make_preprocessor(const TrackerOptions& options) {
  auto stoplist = options.stoplist ? options.stoplist
                                   : std::make_shared<const Stoplist>(Stoplist::default_english());
  return Preprocessor(std::move(stoplist), options.preprocess);
}

WindowOptions window_options(const TrackerSpec& spec) {
  return WindowOptions{spec.window_length, spec.refresh_rate, spec.reorder_slack};
}

}  // namespace

std::string_view to_string(TrackingMode mode) {
  return mode == TrackingMode::Adaptive ? "adaptive" : "static";
}

TrackingMode parse_tracking_mode(std::string_view name) {
  if (name == "adaptive") return TrackingMode::Adaptive;
  if (name == "static") return TrackingMode::Static;
  throw ConfigError("unknown tracking mode '" + std::string(name) + "'");
}

Query make_query(std::string text, Instant created_at, const Preprocessor& preprocessor) {
  Query query;
  query.tokens = preprocessor(text, "query");
  query.text = std::move(text);
  query.created_at = created_at;
  const bool has_terms = std::any_of(query.tokens.tokens.begin(), query.tokens.tokens.end(),
                                     [](const std::string& t) { return !is_placeholder(t); });
  if (!has_terms) throw ConfigError("query '" + query.text + "' has no terms after preprocessing");
  return query;
}

void TrackerSpec::validate() const {
  if (!std::isfinite(threshold) || threshold < 0.0) {
    throw ConfigError("threshold must be a finite value >= 0");
  }
  if (window_length <= Duration::zero() || refresh_rate <= Duration::zero()) {
    throw ConfigError("window length and refresh rate must be positive");
  }
  if (mode == TrackingMode::Adaptive && refresh_rate > window_length) {
    throw ConfigError("refresh rate must not exceed the window length");
  }
  if (static_train_span && *static_train_span <= Duration::zero()) {
    throw ConfigError("static training span must be positive");
  }
  if (reorder_slack < Duration::zero()) throw ConfigError("reorder slack must be >= 0");
}

ModelFactory default_model_factory() {
  return [](ModelKind kind, const WindowSnapshot& snapshot, const ModelConfig& config) {
    return std::make_shared<const RepresentationModel>(
        train_model(kind, snapshot.docs(), config, snapshot.taken_at()));
  };
}

Tracker::Tracker(EventSpec event, TrackerOptions options,
                 std::shared_ptr<const RepresentationModel> pretrained, ModelFactory factory)
    : event_(std::move(event)),
      options_(std::move(options)),
      preprocessor_(make_preprocessor(options_)),
      factory_(std::move(factory)),
      window_(window_options(options_.spec), preprocessor_) {
  options_.spec.validate();
  if (event_.end < event_.start) throw ConfigError("event ends before it starts");
  query_ = make_query(event_.query, event_.start, preprocessor_);
  if (pretrained) {
    if (pretrained->kind() != options_.spec.model) {
      throw ConfigError("pretrained model kind does not match the tracker spec");
    }
    publish(std::move(pretrained));
    static_trained_ = true;
  }
}

void Tracker::publish(std::shared_ptr<const RepresentationModel> model) {
  slot_.publish(std::make_shared<const QueryScorer>(std::move(model), query_.tokens));
}

void Tracker::observe(const Tweet& tweet) {
  ++stats_.seen;
  if (!lang_filter(tweet, options_.languages)) {
    ++stats_.filtered_lang;
    return;
  }
  const Instant ts = tweet.timestamp;
  if (ts > event_.end) return;
  const auto& spec = options_.spec;

  if (spec.mode == TrackingMode::Static) {
    if (ts < event_.start) {
      if (!static_trained_ && ts >= event_.start - spec.train_span()) {
        static_docs_.push_back(preprocessor_(tweet));
        static_times_.push_back(ts);
      }
      return;
    }
    if (!static_trained_) train_static();
    score(tweet);
    return;
  }

  if (ts <= event_.start - spec.window_length) return;
  const auto advanced = window_.advance(tweet);
  if (!advanced.accepted) {
    ++stats_.dropped_late;
    return;
  }
  if (ts < event_.start) return;

  if (spec.refresh_enabled) {
    if (advanced.refresh) {
      refresh(advanced.refresh->at);
    } else if (!slot_.acquire()) {
      refresh(*window_.now());
      window_.mark_refreshed(*window_.now());
    }
  }
  score(tweet);
}

void Tracker::refresh(Instant at) {
  const WindowSnapshot snapshot = window_.snapshot();
  RefreshRecord record;
  record.at = at;
  record.docs = snapshot.size();
  record.contained = snapshot.contained_within(options_.spec.window_length);
  if (!record.contained) ++stats_.containment_violations;
  try {
    if (snapshot.empty()) throw TrainingError("empty window");
    publish(factory_(options_.spec.model, snapshot, options_.models));
    record.ok = true;
  } catch (const Error& e) {
    ++stats_.refresh_failures;
    record.note = e.what();
    spdlog::warn("refresh at {} failed ({}); keeping the previous model", format_instant(at),
                 e.what());
  }
  stats_.refreshes.push_back(std::move(record));
}

void Tracker::train_static() {
  static_trained_ = true;
  const WindowSnapshot snapshot(event_.start, std::move(static_docs_), std::move(static_times_));
  static_docs_.clear();
  static_times_.clear();
  RefreshRecord record;
  record.at = event_.start;
  record.docs = snapshot.size();
  record.contained = snapshot.contained_within(options_.spec.train_span());
  if (snapshot.empty()) {
    throw TrainingError("no tweets in the static training span before " +
                        format_instant(event_.start));
  }
  publish(factory_(options_.spec.model, snapshot, options_.models));
  record.ok = true;
  stats_.refreshes.push_back(std::move(record));
}

void Tracker::score(const Tweet& tweet) {
  ++stats_.in_period;
  const auto scorer = slot_.acquire();
  if (!scorer) {
    ++stats_.no_model;
    return;
  }
  const auto& spec = options_.spec;
  const Instant trained_at = scorer->model().trained_at();
  const Duration staleness = tweet.timestamp - trained_at;
  stats_.max_staleness = std::max(stats_.max_staleness, staleness);
  if (spec.mode == TrackingMode::Adaptive && spec.refresh_enabled &&
      staleness > spec.refresh_rate) {
    ++stats_.staleness_violations;
  }

  const auto similarity = scorer->score(preprocessor_(tweet));
  if (!similarity) {
    ++stats_.unrepresentable;
    return;
  }
  ++stats_.scored;
  if (spec.threshold <= 0.0 || similarity->value >= spec.threshold) {
    ++stats_.included;
    entries_.push_back(TimelineEntry{tweet, similarity->value, similarity->raw, trained_at, true});
  }
}

Timeline Tracker::finish() {
  Timeline timeline;
  timeline.event_id = event_.id;
  timeline.query = query_;
  timeline.model = options_.spec.model;
  timeline.mode = options_.spec.mode;
  timeline.start = event_.start;
  timeline.end = event_.end;
  timeline.entries = entries_;
  std::stable_sort(timeline.entries.begin(), timeline.entries.end(),
                   [](const TimelineEntry& a, const TimelineEntry& b) {
                     return a.tweet.timestamp < b.tweet.timestamp;
                   });
  return timeline;
}

TrackResult track(std::span<const Tweet> stream, const EventSpec& event,
                  const TrackerOptions& options,
                  std::shared_ptr<const RepresentationModel> pretrained, ModelFactory factory) {
  Tracker tracker(event, options, std::move(pretrained), std::move(factory));
  for (const auto& tweet : stream) tracker.observe(tweet);
  TrackResult result{tracker.finish(), tracker.stats()};
  return result;
}

}  // namespace newstrack
