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

#ifndef ZKC_ECONOMICS_DECIMAL_HPP_
#define ZKC_ECONOMICS_DECIMAL_HPP_

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "zkc/common/error.hpp"

namespace zkc::economics {

// Exact decimal: units * 10^-scale with an arbitrary-precision integer.
class Decimal {
 public:
  using Int = boost::multiprecision::cpp_int;

  Decimal() = default;
  Decimal(Int units, unsigned scale) : units_(std::move(units)), scale_(scale) {}
  static Decimal from_int(std::int64_t v) { return Decimal(Int(v), 0); }

  // Plain decimal notation: optional sign, digits, optional fraction.
  static Decimal parse(std::string_view s) {
    auto fail = [&] { return Error(ErrorCode::kInvalidDecimal, std::string(s)); };
    if (s.empty()) throw fail();
    bool neg = false;
    if (s.front() == '-' || s.front() == '+') {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    Int units = 0;
    unsigned scale = 0;
    bool seen_point = false, seen_digit = false;
    for (char c : s) {
      if (c == '.') {
        if (seen_point) throw fail();
        seen_point = true;
      } else if (c >= '0' && c <= '9') {
        units = units * 10 + (c - '0');
        seen_digit = true;
        if (seen_point) ++scale;
      } else {
        throw fail();
      }
    }
    if (!seen_digit) throw fail();
    return Decimal(neg ? Int(-units) : units, scale);
  }

  const Int& units() const { return units_; }
  unsigned scale() const { return scale_; }
  bool is_negative() const { return units_ < 0; }
  bool is_zero() const { return units_ == 0; }

  Decimal rescaled(unsigned scale) const {
    if (scale >= scale_) return Decimal(units_ * pow10(scale - scale_), scale);
    return round_to(scale);
  }

  // Half away from zero.
  Decimal round_to(unsigned places) const {
    if (places >= scale_) return rescaled(places);
    Int div = pow10(scale_ - places);
    Int q = units_ / div;
    Int rem = units_ % div;
    if (rem < 0) rem = -rem;
    if (rem * 2 >= div) q += units_ < 0 ? -1 : 1;
    return Decimal(q, places);
  }

  std::string to_string() const { return format(units_, scale_); }
  std::string to_string(unsigned places) const {
    Decimal r = round_to(places);
    return format(r.units_, r.scale_);
  }

  friend Decimal operator+(const Decimal& a, const Decimal& b) {
    unsigned s = std::max(a.scale_, b.scale_);
    return Decimal(a.rescaled(s).units_ + b.rescaled(s).units_, s);
  }
  friend Decimal operator-(const Decimal& a, const Decimal& b) {
    unsigned s = std::max(a.scale_, b.scale_);
    return Decimal(a.rescaled(s).units_ - b.rescaled(s).units_, s);
  }
  friend Decimal operator*(const Decimal& a, const Decimal& b) { return Decimal(a.units_ * b.units_, a.scale_ + b.scale_); }
  friend Decimal operator*(const Decimal& a, std::int64_t k) { return Decimal(a.units_ * k, a.scale_); }

  friend bool operator==(const Decimal& a, const Decimal& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    unsigned s = std::max(a.scale_, b.scale_);
    Int x = a.rescaled(s).units_, y = b.rescaled(s).units_;
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  static Int pow10(unsigned n) {
    Int r = 1;
    for (unsigned i = 0; i < n; ++i) r *= 10;
    return r;
  }
  static std::string format(const Int& units, unsigned scale) {
    bool neg = units < 0;
    std::string digits = (neg ? Int(-units) : units).str();
    if (digits.size() <= scale) digits.insert(0, scale + 1 - digits.size(), '0');
    if (scale > 0) digits.insert(digits.size() - scale, ".");
    return neg ? "-" + digits : digits;
  }

  Int units_ = 0;
  unsigned scale_ = 0;
};

}  // namespace zkc::economics

#endif  // ZKC_ECONOMICS_DECIMAL_HPP_
