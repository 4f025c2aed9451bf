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

#include "newstrack/timeline_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "newstrack/error.hpp"
#include "newstrack/stream.hpp"

namespace newstrack {

using nlohmann::ordered_json;

void write_timeline(std::ostream& out, const Timeline& timeline,
                    const TimelineWriteOptions& options) {
  for (const auto& entry : timeline.entries) {
    if (!entry.selected && !options.keep_rejected) continue;
    ordered_json record;
    record["id"] = entry.tweet.id;
    record["timestamp"] = format_instant(entry.tweet.timestamp);
    record["author"] = entry.tweet.author;
    record["text"] = entry.tweet.text;
    record["score"] = entry.score;
    record["raw_score"] = entry.raw_score;
    record["model_trained_at"] = format_instant(entry.model_trained_at);
    record["model"] = std::string(to_string(timeline.model));
    record["mode"] = std::string(to_string(timeline.mode));
    if (options.keep_rejected) record["selected"] = entry.selected;
    out << record.dump() << '\n';
  }
  if (!out) throw IoError("failed writing timeline");
}

void write_timeline(const std::filesystem::path& path, const Timeline& timeline,
                    const TimelineWriteOptions& options) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_timeline(out, timeline, options);
}

TimelineFile read_timeline(std::istream& in, const std::string& source) {
  TimelineFile file;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      TimelineEntry entry;
      entry.tweet = parse_tweet_record(line);
      const auto record = nlohmann::json::parse(line);
      if (const auto it = record.find("score"); it != record.end() && it->is_number()) {
        entry.score = it->get<double>();
      }
      if (const auto it = record.find("raw_score"); it != record.end() && it->is_number()) {
        entry.raw_score = it->get<double>();
      }
      if (const auto it = record.find("model_trained_at"); it != record.end() && it->is_string()) {
        entry.model_trained_at = parse_instant(it->get<std::string>());
      }
      if (const auto it = record.find("selected"); it != record.end() && it->is_boolean()) {
        entry.selected = it->get<bool>();
      }
      if (file.model.empty()) {
        if (const auto it = record.find("model"); it != record.end() && it->is_string()) {
          file.model = it->get<std::string>();
        }
        if (const auto it = record.find("mode"); it != record.end() && it->is_string()) {
          file.mode = it->get<std::string>();
        }
      }
      file.entries.push_back(std::move(entry));
    } catch (const DataError& e) {
      throw DataError(fmt::format("{}:{}: {}", source, number, e.what()));
    }
  }
  return file;
}

TimelineFile read_timeline(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open timeline " + path.string());
  return read_timeline(in, path.string());
}

}  // namespace newstrack
