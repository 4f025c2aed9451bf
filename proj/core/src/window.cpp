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

#include "newstrack/window.hpp"

#include <algorithm>

#include <spdlog/spdlog.h>

#include "newstrack/error.hpp"

namespace newstrack {

WindowSnapshot::WindowSnapshot(Instant taken_at, std::vector<TokenSequence> docs,
                               std::vector<Instant> times)
    : taken_at_(taken_at),
      data_(std::make_shared<const Data>(Data{std::move(docs), std::move(times)})) {}

std::span<const TokenSequence> WindowSnapshot::docs() const {
  if (!data_) return {};
  return data_->docs;
}

std::span<const Instant> WindowSnapshot::timestamps() const {
  if (!data_) return {};
  return data_->times;
}

bool WindowSnapshot::contained_within(Duration length) const {
  return std::all_of(timestamps().begin(), timestamps().end(), [&](Instant t) {
    return t > taken_at_ - length && t <= taken_at_;
  });
}

SlidingWindow::SlidingWindow(WindowOptions options, Preprocessor preprocessor)
    : options_(options), preprocessor_(std::move(preprocessor)) {
  if (options_.window_length <= Duration::zero() || options_.refresh_rate <= Duration::zero()) {
    throw ConfigError("window length and refresh rate must be positive");
  }
  if (options_.reorder_slack < Duration::zero()) throw ConfigError("negative reorder slack");
}

AdvanceResult SlidingWindow::advance(const Tweet& tweet) {
  return advance(tweet.timestamp, preprocessor_(tweet));
}

AdvanceResult SlidingWindow::advance(Instant timestamp, TokenSequence tokens) {
  AdvanceResult result;
  if (now_ && timestamp < *now_ - options_.reorder_slack) {
    ++dropped_;
    spdlog::warn("dropping tweet {} at {}: older than window time {} minus slack",
                 tokens.source_id, format_instant(timestamp), format_instant(*now_));
    return result;
  }
  result.accepted = true;

  // Keep the buffer time ordered; ties stay in arrival order.
  const auto pos = std::upper_bound(buffer_.begin(), buffer_.end(), timestamp,
                                    [](Instant t, const Entry& e) { return t < e.timestamp; });
  buffer_.insert(pos, Entry{timestamp, std::move(tokens)});
  if (!now_ || timestamp > *now_) now_ = timestamp;

  const Instant horizon = *now_ - options_.window_length;
  while (!buffer_.empty() && buffer_.front().timestamp <= horizon) {
    buffer_.pop_front();
    ++result.evicted;
  }

  if (!last_refresh_ || *now_ - *last_refresh_ >= options_.refresh_rate) {
    last_refresh_ = *now_;
    result.refresh = RefreshSignal{*now_};
  }
  return result;
}

WindowSnapshot SlidingWindow::snapshot() const {
  std::vector<TokenSequence> docs;
  std::vector<Instant> times;
  docs.reserve(buffer_.size());
  times.reserve(buffer_.size());
  for (const auto& entry : buffer_) {
    docs.push_back(entry.tokens);
    times.push_back(entry.timestamp);
  }
  return WindowSnapshot(now_.value_or(Instant{}), std::move(docs), std::move(times));
}

}  // namespace newstrack
