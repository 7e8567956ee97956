// Copyright 2026 The zkcompliance Authors.
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

#ifndef ZKC_VAULT_CALENDAR_HPP_
#define ZKC_VAULT_CALENDAR_HPP_

#include <charconv>
#include <cstdio>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "zkc/common/error.hpp"

namespace zkc::vault {

inline constexpr int kMinYear = 1970;
inline constexpr int kMaxYear = 2105;
inline constexpr std::int64_t kSecondsPerDay = 86400;

// Days since 1970-01-01 in the proleptic Gregorian calendar.
inline std::uint32_t date_to_days(int year, unsigned month, unsigned day) {
  if (year < kMinYear || year > kMaxYear) throw Error(ErrorCode::kInvalidDate, "year out of range");
  std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
  if (!ymd.ok()) throw Error(ErrorCode::kInvalidDate, "no such date");
  return static_cast<std::uint32_t>(std::chrono::sys_days{ymd}.time_since_epoch().count());
}

struct CivilDate {
  int year;
  unsigned month;
  unsigned day;
};

inline CivilDate days_to_date(std::int64_t days) {
  std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days}}};
  return {static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day())};
}

// "YYYY-MM-DD"
inline std::uint32_t parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') throw Error(ErrorCode::kInvalidDate, std::string(s));
  auto num = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, v);
    if (ec != std::errc{} || p != s.data() + pos + len) throw Error(ErrorCode::kInvalidDate, std::string(s));
    return v;
  };
  return date_to_days(num(0, 4), static_cast<unsigned>(num(5, 2)), static_cast<unsigned>(num(8, 2)));
}

inline std::string format_date(std::int64_t days) {
  CivilDate d = days_to_date(days);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", d.year, d.month, d.day);
  return buf;
}

// Unix seconds to whole days, flooring.
inline std::int64_t unix_to_day(std::int64_t secs) {
  return secs >= 0 ? secs / kSecondsPerDay : -((-secs + kSecondsPerDay - 1) / kSecondsPerDay);
}

}  // namespace zkc::vault

#endif  // ZKC_VAULT_CALENDAR_HPP_
