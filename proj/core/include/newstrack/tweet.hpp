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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "newstrack/time.hpp"

namespace newstrack {

struct Tweet {
  std::string id;
  Instant timestamp{};
  std::string author;
  std::string text;
  std::optional<std::string> lang;
};

/// Slot marker left where a stopword was removed. Tokenization never
/// produces '<' or '>' inside a word, so the marker cannot collide with text.
inline constexpr std::string_view kPlaceholder = "<stop>";

inline bool is_placeholder(std::string_view token) { return token == kPlaceholder; }

/// Preprocessed form of one tweet. Tokens are lowercased words, @mentions,
/// #hashtags, or kPlaceholder.
struct TokenSequence {
  std::vector<std::string> tokens;
  std::string source_id;

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;
};

}  // namespace newstrack
