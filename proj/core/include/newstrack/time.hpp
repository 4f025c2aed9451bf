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

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace newstrack {

using Duration = std::chrono::milliseconds;
/// UTC instant with millisecond precision.
using Instant = std::chrono::sys_time<Duration>;

/// Parses an RFC 3339 timestamp ("2013-11-25T15:30:00Z", optional fractional
/// seconds, "Z" or "+hh:mm" offset) or a decimal count of epoch milliseconds.
/// Throws DataError on anything else.
Instant parse_instant(std::string_view text);

Instant from_epoch_ms(std::int64_t ms);
std::int64_t to_epoch_ms(Instant t);

/// RFC 3339 in UTC; fractional part only when the instant has milliseconds.
std::string format_instant(Instant t);

}  // namespace newstrack
