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

#include "newstrack/stream.hpp"

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "newstrack/error.hpp"

namespace newstrack {

using nlohmann::json;

Tweet parse_tweet_record(std::string_view line) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("unparseable record: ") + e.what());
  }
  if (!record.is_object()) throw DataError("record is not an object");

  Tweet tweet;
  const auto id = record.find("id");
  if (id == record.end()) throw DataError("record has no id");
  if (id->is_string()) {
    tweet.id = id->get<std::string>();
  } else if (id->is_number_integer()) {
    tweet.id = std::to_string(id->get<std::int64_t>());
  } else {
    throw DataError("id must be a string or integer");
  }
  if (tweet.id.empty()) throw DataError("empty id");

  auto ts = record.find("timestamp");
  if (ts == record.end()) ts = record.find("ts");
  if (ts == record.end()) throw DataError("record has no timestamp");
  if (ts->is_string()) {
    tweet.timestamp = parse_instant(ts->get<std::string>());
  } else if (ts->is_number_integer()) {
    tweet.timestamp = from_epoch_ms(ts->get<std::int64_t>());
  } else {
    throw DataError("timestamp must be a string or integer");
  }

  const auto text = record.find("text");
  if (text == record.end() || !text->is_string()) throw DataError("record has no text");
  tweet.text = text->get<std::string>();

  if (const auto author = record.find("author"); author != record.end()) {
    if (!author->is_string()) throw DataError("author must be a string");
    tweet.author = author->get<std::string>();
  }
  if (const auto lang = record.find("lang"); lang != record.end() && !lang->is_null()) {
    if (!lang->is_string()) throw DataError("lang must be a string");
    tweet.lang = lang->get<std::string>();
  }
  return tweet;
}

std::string format_tweet_record(const Tweet& tweet) {
  json record = {{"id", tweet.id},
                 {"timestamp", format_instant(tweet.timestamp)},
                 {"author", tweet.author},
                 {"text", tweet.text}};
  if (tweet.lang) record["lang"] = *tweet.lang;
  return record.dump();
}

TweetReader::TweetReader(std::istream& in) : in_(&in), source_name_("<stream>") {}

TweetReader::TweetReader(const std::filesystem::path& path)
    : owned_(std::make_unique<std::ifstream>(path)), in_(owned_.get()),
      source_name_(path.string()) {
  if (!*owned_) throw IoError("cannot open stream file " + path.string());
}

TweetReader::TweetReader(TweetReader&&) noexcept = default;
TweetReader& TweetReader::operator=(TweetReader&&) noexcept = default;
TweetReader::~TweetReader() = default;

std::optional<Tweet> TweetReader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++counters_.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      ++counters_.blank;
      continue;
    }
    try {
      Tweet tweet = parse_tweet_record(line);
      ++counters_.records;
      return tweet;
    } catch (const DataError& e) {
      ++counters_.malformed;
      spdlog::warn("{}:{}: skipping malformed record: {}", source_name_, counters_.lines,
                   e.what());
    }
  }
  if (in_->bad()) throw IoError("read failure on " + source_name_);
  return std::nullopt;
}

std::vector<Tweet> read_stream(const std::filesystem::path& path, IngestCounters* counters) {
  TweetReader reader(path);
  std::vector<Tweet> tweets;
  while (auto tweet = reader.next()) tweets.push_back(std::move(*tweet));
  if (counters) *counters = reader.counters();
  return tweets;
}

}  // namespace newstrack
