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
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "newstrack/tweet.hpp"

namespace newstrack {

/// Parses one stream record. Records are JSON objects with a string "id"
/// (numbers are accepted and stringified), "timestamp" or "ts" (RFC 3339
/// string or epoch milliseconds), "text", and optional "author" and "lang".
/// Throws DataError when a required field is missing or has the wrong type.
Tweet parse_tweet_record(std::string_view line);

/// Serializes a tweet as a single stream record line (no trailing newline).
std::string format_tweet_record(const Tweet& tweet);

struct IngestCounters {
  std::size_t lines = 0;
  std::size_t records = 0;
  std::size_t malformed = 0;
  std::size_t blank = 0;
};

/// Lazily reads tweets from a line-delimited record source in file order.
/// Malformed lines are logged, counted and skipped.
class TweetReader {
 public:
  explicit TweetReader(std::istream& in);
  /// Opens `path`; throws IoError if it cannot be read.
  explicit TweetReader(const std::filesystem::path& path);

  TweetReader(TweetReader&&) noexcept;
  TweetReader& operator=(TweetReader&&) noexcept;
  ~TweetReader();

  std::optional<Tweet> next();

  const IngestCounters& counters() const { return counters_; }

 private:
  std::unique_ptr<std::ifstream> owned_;
  std::istream* in_;
  std::string source_name_;
  IngestCounters counters_;
};

/// Reads every tweet from `path`.
std::vector<Tweet> read_stream(const std::filesystem::path& path,
                               IngestCounters* counters = nullptr);

}  // namespace newstrack
