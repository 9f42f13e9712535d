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

#include "epi/clock.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <string>
#include <vector>

namespace epi {
namespace {

using namespace std::chrono;

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Date> make_date(int y, int m, int d) {
  year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return sys_days{ymd};
}

std::optional<seconds> make_time(int h, int mi, int s) {
  if (h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 60) return std::nullopt;
  return hours{h} + minutes{mi} + seconds{s};
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

std::optional<int> month_number(std::string_view name) {
  static constexpr std::array<std::string_view, 12> kMonths = {
      "jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec"};
  if (name.size() < 3) return std::nullopt;
  for (std::size_t i = 0; i < kMonths.size(); ++i) {
    if (iequals(name.substr(0, 3), kMonths[i])) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

// Offset east of UTC, in minutes.
std::optional<int> zone_offset(std::string_view z) {
  if (z.empty()) return 0;
  if (z[0] == '+' || z[0] == '-') {
    std::string digits;
    for (char c : z.substr(1)) {
      if (c != ':') digits += c;
    }
    if (digits.size() != 4) return std::nullopt;
    auto hh = to_int(digits.substr(0, 2));
    auto mm = to_int(digits.substr(2, 2));
    if (!hh || !mm) return std::nullopt;
    int off = *hh * 60 + *mm;
    return z[0] == '-' ? -off : off;
  }
  struct Named {
    std::string_view name;
    int offset;
  };
  static constexpr std::array<Named, 12> kZones = {{{"GMT", 0},
                                                    {"UT", 0},
                                                    {"UTC", 0},
                                                    {"Z", 0},
                                                    {"EST", -300},
                                                    {"EDT", -240},
                                                    {"CST", -360},
                                                    {"CDT", -300},
                                                    {"MST", -420},
                                                    {"MDT", -360},
                                                    {"PST", -480},
                                                    {"PDT", -420}}};
  for (const auto& zone : kZones) {
    if (iequals(z, zone.name)) return zone.offset;
  }
  if (iequals(z, "PKT")) return 300;
  return std::nullopt;
}

}  // namespace

std::string format_date(Date d) {
  year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

std::string format_timestamp(Timestamp t) {
  const Date d = date_of(t);
  hh_mm_ss hms{t - d};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%sT%02d:%02d:%02dZ", format_date(d).c_str(),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

std::optional<Date> parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  auto y = to_int(s.substr(0, 4));
  auto m = to_int(s.substr(5, 2));
  auto d = to_int(s.substr(8, 2));
  if (!y || !m || !d) return std::nullopt;
  return make_date(*y, *m, *d);
}

std::optional<Timestamp> parse_iso8601(std::string_view s) {
  if (s.size() < 10) return std::nullopt;
  auto date = parse_date(s.substr(0, 10));
  if (!date) return std::nullopt;
  if (s.size() == 10) return Timestamp{*date};
  if (s[10] != 'T' && s[10] != ' ') return std::nullopt;
  std::string_view rest = s.substr(11);
  if (rest.size() < 5 || rest[2] != ':') return std::nullopt;
  auto h = to_int(rest.substr(0, 2));
  auto mi = to_int(rest.substr(3, 2));
  int sec = 0;
  rest.remove_prefix(5);
  if (!rest.empty() && rest[0] == ':') {
    if (rest.size() < 3) return std::nullopt;
    auto sv = to_int(rest.substr(1, 2));
    if (!sv) return std::nullopt;
    sec = *sv;
    rest.remove_prefix(3);
  }
  if (!rest.empty() && rest[0] == '.') {
    std::size_t i = 1;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
    rest.remove_prefix(i);
  }
  if (!h || !mi) return std::nullopt;
  auto tod = make_time(*h, *mi, sec);
  auto off = zone_offset(rest);
  if (!tod || !off) return std::nullopt;
  return Timestamp{*date} + *tod - minutes{*off};
}

std::optional<Timestamp> parse_rfc822(std::string_view s) {
  auto parts = split_ws(s);
  if (!parts.empty() && parts[0].back() == ',') parts.erase(parts.begin());
  if (!parts.empty() && !std::isdigit(static_cast<unsigned char>(parts[0][0])) &&
      !month_number(parts[0])) {
    parts.erase(parts.begin());  // weekday without a trailing comma
  }
  if (parts.size() < 4) return std::nullopt;
  auto d = to_int(parts[0]);
  auto m = month_number(parts[1]);
  auto y = to_int(parts[2]);
  if (!d || !m || !y) return std::nullopt;
  if (parts[2].size() == 2) *y += *y < 50 ? 2000 : 1900;
  auto date = make_date(*y, *m, *d);
  if (!date) return std::nullopt;

  std::string_view t = parts[3];
  int fields[3] = {0, 0, 0};
  int n = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.size() && n < 3; ++i) {
    if (i == t.size() || t[i] == ':') {
      auto v = to_int(t.substr(start, i - start));
      if (!v) return std::nullopt;
      fields[n++] = *v;
      start = i + 1;
    }
  }
  if (n < 2) return std::nullopt;
  auto tod = make_time(fields[0], fields[1], fields[2]);
  auto off = zone_offset(parts.size() > 4 ? parts[4] : std::string_view{});
  if (!tod || !off) return std::nullopt;
  return Timestamp{*date} + *tod - minutes{*off};
}

}  // namespace epi
