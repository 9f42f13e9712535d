// Copyright 2026 The epi-flasher Authors.
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

#ifndef EPI_CLOCK_HPP_
#define EPI_CLOCK_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace epi {

using Timestamp = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;

inline Date date_of(Timestamp t) { return std::chrono::floor<std::chrono::days>(t); }
inline Timestamp now_utc() {
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

// YYYY-MM-DD
std::string format_date(Date d);
// YYYY-MM-DDTHH:MM:SSZ
std::string format_timestamp(Timestamp t);

std::optional<Date> parse_date(std::string_view s);
// Accepts YYYY-MM-DDTHH:MM:SS with an optional fraction and Z / +HH:MM offset.
std::optional<Timestamp> parse_iso8601(std::string_view s);
// RFC 822 / RFC 1123 dates as used by RSS pubDate, e.g.
// "Wed, 02 Oct 2002 13:00:00 GMT" or "2 Oct 2002 18:00 +0500".
std::optional<Timestamp> parse_rfc822(std::string_view s);

}  // namespace epi

#endif  // EPI_CLOCK_HPP_
