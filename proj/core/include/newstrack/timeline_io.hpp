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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "newstrack/tracker.hpp"

namespace newstrack {

/// Timeline files are line-delimited JSON records, one per tweet:
///   {"id", "timestamp", "author", "text", "score", "raw_score",
///    "model_trained_at", "model", "mode"[, "selected"]}
/// Reference timelines use the same layout; only id, timestamp and text are
/// required when reading.
struct TimelineWriteOptions {
  /// Write every entry with a "selected" flag instead of only selected ones.
  bool keep_rejected = false;
};

void write_timeline(std::ostream& out, const Timeline& timeline,
                    const TimelineWriteOptions& options = {});
void write_timeline(const std::filesystem::path& path, const Timeline& timeline,
                    const TimelineWriteOptions& options = {});

struct TimelineFile {
  std::vector<TimelineEntry> entries;
  /// From the first record that carries them; empty for bare references.
  std::string model;
  std::string mode;
};

/// Throws DataError naming the offending line; IoError if unreadable.
TimelineFile read_timeline(std::istream& in, const std::string& source = "<timeline>");
TimelineFile read_timeline(const std::filesystem::path& path);

}  // namespace newstrack
