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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newstrack/model.hpp"
#include "newstrack/rouge.hpp"
#include "newstrack/summarizer.hpp"
#include "newstrack/tracker.hpp"

namespace newstrack::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kInternal = 3 };

struct RunConfig {
  std::filesystem::path stream;
  std::filesystem::path event;
  std::filesystem::path out;
  TrackerSpec tracker;
  /// Set when --threshold was given; otherwise an event's per-model threshold applies.
  bool threshold_explicit = false;
  ModelConfig models;
  SummaryConfig summary;
  /// Set when --summary-length was given; otherwise the reference mean is used.
  bool summary_length_explicit = false;
  EvalConfig eval;
  std::set<std::string> languages{"en"};
  std::optional<std::filesystem::path> cache_dir;
  bool keep_rejected = false;

  void set_dim(std::size_t dim);
  void set_seed(std::uint64_t seed);
  void validate() const;
};

struct EventFile {
  EventSpec event;
  std::vector<std::filesystem::path> references;
  std::optional<std::size_t> summary_length;
  std::map<std::string, double> thresholds;
};

/// A single event object or an array of them. Reference paths are resolved
/// against the event file's directory.
std::vector<EventFile> load_events(const std::filesystem::path& path);

std::uint64_t hash_file(const std::filesystem::path& path);
std::string hex64(std::uint64_t value);

struct ValidateReport {
  std::size_t lines = 0;
  std::size_t records = 0;
  std::size_t malformed = 0;
  std::size_t blank = 0;
  /// Records whose timestamp is earlier than the preceding record's.
  std::size_t order_violations = 0;
  std::optional<Instant> first;
  std::optional<Instant> last;
  std::optional<Instant> earliest;
  std::optional<Instant> latest;

  nlohmann::ordered_json to_json() const;
};

ValidateReport cmd_validate(const std::filesystem::path& stream);

/// Trains one model on the window ending at `window_end` (default: the last
/// tweet) and writes a snapshot file.
void cmd_train(const RunConfig& config, std::optional<Instant> window_end,
               const std::filesystem::path& snapshot_out);

struct TrackOutputs {
  Timeline timeline;
  TrackStats stats;
  std::vector<TimelineEntry> summary;
  std::optional<RougeReport> report;
  nlohmann::ordered_json manifest;
};

/// Replays the stream for one event and writes timeline.jsonl, summary.jsonl,
/// manifest.json (and report.json when references exist) under config.out.
TrackOutputs cmd_track(const RunConfig& config, const EventFile& event,
                       const std::filesystem::path* pretrained = nullptr);

std::vector<TimelineEntry> cmd_summarize(const std::filesystem::path& timeline,
                                         const std::filesystem::path& out,
                                         const SummaryConfig& config,
                                         const std::vector<std::filesystem::path>& references,
                                         bool summary_length_explicit, bool keep_rejected);

RougeReport cmd_eval(const std::filesystem::path& system,
                     const std::vector<std::filesystem::path>& references,
                     const EvalConfig& config);

/// Every model kind in both modes for every event; writes a summary table.
std::string cmd_replay_all(const RunConfig& config);

/// Parses arguments and dispatches. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace newstrack::cli
