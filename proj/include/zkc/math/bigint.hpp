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

#ifndef ZKC_MATH_BIGINT_HPP_
#define ZKC_MATH_BIGINT_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace zkc::math {

using u128 = unsigned __int128;

// Fixed-width unsigned integer, little-endian 64-bit limbs.
template <std::size_t N>
struct BigInt {
  std::array<std::uint64_t, N> limbs{};

  static constexpr std::size_t kLimbs = N;
  static constexpr std::size_t kBits = 64 * N;

  static constexpr BigInt from_u64(std::uint64_t v) {
    BigInt out;
    out.limbs[0] = v;
    return out;
  }

  // Parses decimal, or hex with a 0x prefix. Digits beyond the width wrap.
  static constexpr BigInt parse(std::string_view s) {
    BigInt out;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      for (char c : s.substr(2)) {
        std::uint64_t d = (c >= '0' && c <= '9')   ? std::uint64_t(c - '0')
                          : (c >= 'a' && c <= 'f') ? std::uint64_t(c - 'a' + 10)
                                                   : std::uint64_t(c - 'A' + 10);
        out.mul_small(16);
        out.add_small(d);
      }
    } else {
      for (char c : s) {
        out.mul_small(10);
        out.add_small(std::uint64_t(c - '0'));
      }
    }
    return out;
  }

  constexpr bool is_zero() const {
    for (auto l : limbs)
      if (l != 0) return false;
    return true;
  }
  constexpr bool is_odd() const { return limbs[0] & 1; }
  constexpr bool bit(std::size_t i) const {
    return i < kBits && ((limbs[i / 64] >> (i % 64)) & 1);
  }
  constexpr std::size_t num_bits() const {
    for (std::size_t i = N; i-- > 0;) {
      if (limbs[i] != 0) return 64 * i + (64 - static_cast<std::size_t>(__builtin_clzll(limbs[i])));
    }
    return 0;
  }
  // Extracts `width` (< 64) bits starting at bit `pos`.
  constexpr std::uint64_t bits(std::size_t pos, std::size_t width) const {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < width; ++k)
      if (bit(pos + k)) out |= std::uint64_t{1} << k;
    return out;
  }

  constexpr std::uint64_t add(const BigInt& o) {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u128 s = u128(limbs[i]) + o.limbs[i] + carry;
      limbs[i] = static_cast<std::uint64_t>(s);
      carry = static_cast<std::uint64_t>(s >> 64);
    }
    return carry;
  }
  constexpr std::uint64_t sub(const BigInt& o) {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u128 d = u128(limbs[i]) - o.limbs[i] - borrow;
      limbs[i] = static_cast<std::uint64_t>(d);
      borrow = static_cast<std::uint64_t>(d >> 64) & 1;
    }
    return borrow;
  }
  constexpr std::uint64_t mul_small(std::uint64_t m) {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u128 p = u128(limbs[i]) * m + carry;
      limbs[i] = static_cast<std::uint64_t>(p);
      carry = static_cast<std::uint64_t>(p >> 64);
    }
    return carry;
  }
  constexpr void add_small(std::uint64_t v) {
    for (std::size_t i = 0; i < N && v != 0; ++i) {
      u128 s = u128(limbs[i]) + v;
      limbs[i] = static_cast<std::uint64_t>(s);
      v = static_cast<std::uint64_t>(s >> 64);
    }
  }
  // In-place division by a small divisor; returns the remainder.
  constexpr std::uint64_t div_small(std::uint64_t d) {
    u128 rem = 0;
    for (std::size_t i = N; i-- > 0;) {
      u128 cur = (rem << 64) | limbs[i];
      limbs[i] = static_cast<std::uint64_t>(cur / d);
      rem = cur % d;
    }
    return static_cast<std::uint64_t>(rem);
  }
  constexpr void shr1() {
    for (std::size_t i = 0; i < N; ++i) {
      limbs[i] >>= 1;
      if (i + 1 < N) limbs[i] |= limbs[i + 1] << 63;
    }
  }

  template <std::size_t M>
  constexpr BigInt<N + M> mul_wide(const BigInt<M>& o) const {
    BigInt<N + M> out;
    for (std::size_t i = 0; i < N; ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < M; ++j) {
        u128 t = u128(limbs[i]) * o.limbs[j] + out.limbs[i + j] + carry;
        out.limbs[i + j] = static_cast<std::uint64_t>(t);
        carry = static_cast<std::uint64_t>(t >> 64);
      }
      out.limbs[i + M] = carry;
    }
    return out;
  }

  template <std::size_t M>
  constexpr BigInt<M> resize() const {
    BigInt<M> out;
    for (std::size_t i = 0; i < (N < M ? N : M); ++i) out.limbs[i] = limbs[i];
    return out;
  }

  friend constexpr std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    for (std::size_t i = N; i-- > 0;) {
      if (a.limbs[i] != b.limbs[i]) return a.limbs[i] <=> b.limbs[i];
    }
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(const BigInt&, const BigInt&) = default;

  // Big-endian bytes, exactly 8*N long.
  std::array<std::uint8_t, 8 * N> to_be_bytes() const {
    std::array<std::uint8_t, 8 * N> out{};
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t b = 0; b < 8; ++b) {
        out[8 * N - 1 - (8 * i + b)] = static_cast<std::uint8_t>(limbs[i] >> (8 * b));
      }
    }
    return out;
  }
  // Accepts up to 8*N big-endian bytes (shorter input is zero-extended).
  static BigInt from_be_bytes(std::span<const std::uint8_t> in) {
    BigInt out;
    std::size_t n = in.size() < 8 * N ? in.size() : 8 * N;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t byte_index = k;  // from least significant
      std::uint8_t b = in[in.size() - 1 - k];
      out.limbs[byte_index / 8] |= std::uint64_t(b) << (8 * (byte_index % 8));
    }
    return out;
  }

  std::string to_decimal() const {
    if (is_zero()) return "0";
    BigInt t = *this;
    std::string out;
    while (!t.is_zero()) out.insert(out.begin(), char('0' + t.div_small(10)));
    return out;
  }
};

}  // namespace zkc::math

#endif  // ZKC_MATH_BIGINT_HPP_
