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

#include "newstrack/time.hpp"

#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "newstrack/error.hpp"

namespace newstrack {
namespace {

using namespace std::chrono;

[[noreturn]] void bad(std::string_view text) {
  throw DataError(fmt::format("invalid timestamp '{}'", text));
}

int digits(std::string_view text, std::size_t pos, std::size_t count, std::string_view whole) {
  if (pos + count > text.size()) bad(whole);
  int value = 0;
  for (std::size_t i = pos; i < pos + count; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) bad(whole);
    value = value * 10 + (text[i] - '0');
  }
  return value;
}

}  // namespace

Instant from_epoch_ms(std::int64_t ms) { return Instant{Duration{ms}}; }

std::int64_t to_epoch_ms(Instant t) { return t.time_since_epoch().count(); }

Instant parse_instant(std::string_view text) {
  if (text.empty()) bad(text);

  bool all_digits = true;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-'))) {
      all_digits = false;
      break;
    }
  }
  if (all_digits) {
    std::int64_t ms = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), ms);
    if (ec != std::errc{} || ptr != text.data() + text.size()) bad(text);
    return from_epoch_ms(ms);
  }

  // YYYY-MM-DDTHH:MM:SS[.fff][Z|+hh:mm|-hh:mm]
  if (text.size() < 20 || text[4] != '-' || text[7] != '-' ||
      (text[10] != 'T' && text[10] != 't' && text[10] != ' ') || text[13] != ':' ||
      text[16] != ':') {
    bad(text);
  }
  const year_month_day ymd{year{digits(text, 0, 4, text)},
                           month{static_cast<unsigned>(digits(text, 5, 2, text))},
                           day{static_cast<unsigned>(digits(text, 8, 2, text))}};
  if (!ymd.ok()) bad(text);
  const int hh = digits(text, 11, 2, text);
  const int mi = digits(text, 14, 2, text);
  const int ss = digits(text, 17, 2, text);
  if (hh > 23 || mi > 59 || ss > 60) bad(text);

  std::size_t pos = 19;
  std::int64_t millis = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    int scale = 100;
    std::size_t n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (scale > 0) millis += (text[pos] - '0') * scale;
      scale /= 10;
      ++pos;
      ++n;
    }
    if (n == 0) bad(text);
  }
  if (pos >= text.size()) bad(text);

  minutes offset{0};
  const char zone = text[pos];
  if (zone == 'Z' || zone == 'z') {
    ++pos;
  } else if (zone == '+' || zone == '-') {
    if (pos + 6 != text.size() || text[pos + 3] != ':') bad(text);
    const int oh = digits(text, pos + 1, 2, text);
    const int om = digits(text, pos + 4, 2, text);
    offset = hours{oh} + minutes{om};
    if (zone == '-') offset = -offset;
    pos += 6;
  } else {
    bad(text);
  }
  if (pos != text.size()) bad(text);

  const auto local = sys_days{ymd} + hours{hh} + minutes{mi} + seconds{ss} + Duration{millis};
  return time_point_cast<Duration>(local - offset);
}

std::string format_instant(Instant t) {
  const auto day_point = floor<days>(t);
  const year_month_day ymd{day_point};
  const hh_mm_ss<Duration> tod{t - day_point};
  const auto ms = tod.subseconds().count();
  const std::string date =
      fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  tod.hours().count(), tod.minutes().count(), tod.seconds().count());
  if (ms == 0) return date + "Z";
  return fmt::format("{}.{:03d}Z", date, ms);
}

}  // namespace newstrack
