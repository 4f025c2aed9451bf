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
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "newstrack/preprocess.hpp"
#include "newstrack/time.hpp"
#include "newstrack/tweet.hpp"

namespace newstrack {

using namespace std::chrono_literals;

struct WindowOptions {
  Duration window_length = 24h;
  Duration refresh_rate = 15min;
  /// Tweets older than the latest seen time by more than this are dropped.
  Duration reorder_slack = 60s;
};

/// Immutable copy of the window contents at one logical instant.
class WindowSnapshot {
 public:
  WindowSnapshot() = default;
  WindowSnapshot(Instant taken_at, std::vector<TokenSequence> docs, std::vector<Instant> times);

  Instant taken_at() const { return taken_at_; }
  std::span<const TokenSequence> docs() const;
  std::span<const Instant> timestamps() const;
  std::size_t size() const { return data_ ? data_->docs.size() : 0; }
  bool empty() const { return size() == 0; }

  /// Every member timestamp lies in (taken_at - length, taken_at].
  bool contained_within(Duration length) const;

 private:
  struct Data {
    std::vector<TokenSequence> docs;
    std::vector<Instant> times;
  };
  Instant taken_at_{};
  std::shared_ptr<const Data> data_;
};

struct RefreshSignal {
  Instant at;
};

struct AdvanceResult {
  bool accepted = false;
  std::size_t evicted = 0;
  std::optional<RefreshSignal> refresh;
};

/// Fixed-length window over stream time. "Now" is the latest accepted
/// timestamp; the buffer always satisfies now - length < t <= now.
/// Single writer; hand snapshots to readers.
class SlidingWindow {
 public:
  explicit SlidingWindow(WindowOptions options = {}, Preprocessor preprocessor = {});

  AdvanceResult advance(const Tweet& tweet);
  AdvanceResult advance(Instant timestamp, TokenSequence tokens);

  WindowSnapshot snapshot() const;

  /// Records an out-of-band refresh (e.g. a forced initial training).
  void mark_refreshed(Instant at) { last_refresh_ = at; }

  std::optional<Instant> now() const { return now_; }
  std::optional<Instant> last_refresh() const { return last_refresh_; }
  std::size_t size() const { return buffer_.size(); }
  std::size_t dropped() const { return dropped_; }
  const WindowOptions& options() const { return options_; }

 private:
  struct Entry {
    Instant timestamp;
    TokenSequence tokens;
  };

  WindowOptions options_;
  Preprocessor preprocessor_;
  std::deque<Entry> buffer_;
  std::optional<Instant> now_;
  std::optional<Instant> last_refresh_;
  std::size_t dropped_ = 0;
};

}  // namespace newstrack
