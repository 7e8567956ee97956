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

#ifndef ZKC_MATH_FP_HPP_
#define ZKC_MATH_FP_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "zkc/math/bigint.hpp"

namespace zkc::math {

// Prime field in Montgomery representation, R = 2^256. `Params` supplies
// `static constexpr BigInt<4> kModulus` (an odd prime below 2^255).
template <class Params>
class Fp {
 public:
  using Int = BigInt<4>;
  static constexpr Int kModulus = Params::kModulus;
  static constexpr std::size_t kBits = kModulus.num_bits();

 private:
  static constexpr std::uint64_t compute_inv() {
    // Newton iteration for p^{-1} mod 2^64, then negate.
    std::uint64_t inv = 1;
    for (int i = 0; i < 6; ++i) inv *= 2 - kModulus.limbs[0] * inv;
    return ~inv + 1;
  }
  static constexpr Int double_mod(Int a) {
    std::uint64_t carry = a.add(a);
    if (carry != 0 || a >= kModulus) a.sub(kModulus);
    return a;
  }
  static constexpr Int compute_r(int doublings) {
    Int a = Int::from_u64(1);
    for (int i = 0; i < doublings; ++i) a = double_mod(a);
    return a;
  }

 public:
  static constexpr std::uint64_t kInv = compute_inv();
  static constexpr Int kR = compute_r(256);
  static constexpr Int kR2 = compute_r(512);

  constexpr Fp() = default;

  static constexpr Fp zero() { return Fp(); }
  static constexpr Fp one() { return from_raw(kR); }
  static constexpr Fp from_u64(std::uint64_t v) { return from_int(Int::from_u64(v)); }
  // Reduces any 256-bit value.
  static constexpr Fp from_int(Int v) {
    while (v >= kModulus) v.sub(kModulus);
    Fp out = from_raw(v);
    return out * from_raw(kR2);
  }
  static constexpr Fp parse(std::string_view s) { return from_int(Int::parse(s)); }
  // Returns false (leaving `out` untouched) when the bytes encode a value >= p.
  static bool from_be_bytes_canonical(std::span<const std::uint8_t> in, Fp& out) {
    if (in.size() != 32) return false;
    Int v = Int::from_be_bytes(in);
    if (v >= kModulus) return false;
    out = from_int(v);
    return true;
  }
  // Interprets 32 big-endian bytes as an integer and reduces it mod p.
  static Fp from_be_bytes_reduce(std::span<const std::uint8_t> in) {
    return from_int(Int::from_be_bytes(in));
  }

  constexpr Int to_int() const { return mont_mul(v_, Int::from_u64(1)); }
  std::array<std::uint8_t, 32> to_be_bytes() const { return to_int().to_be_bytes(); }
  std::string to_decimal() const { return to_int().to_decimal(); }

  constexpr bool is_zero() const { return v_.is_zero(); }
  friend constexpr bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }

  friend constexpr Fp operator+(const Fp& a, const Fp& b) {
    Fp out = a;
    out += b;
    return out;
  }
  constexpr Fp& operator+=(const Fp& b) {
    std::uint64_t carry = v_.add(b.v_);
    if (carry != 0 || v_ >= kModulus) v_.sub(kModulus);
    return *this;
  }
  friend constexpr Fp operator-(const Fp& a, const Fp& b) {
    Fp out = a;
    out -= b;
    return out;
  }
  constexpr Fp& operator-=(const Fp& b) {
    if (v_.sub(b.v_) != 0) v_.add(kModulus);
    return *this;
  }
  constexpr Fp operator-() const {
    if (is_zero()) return *this;
    Fp out = from_raw(kModulus);
    out.v_.sub(v_);
    return out;
  }
  friend constexpr Fp operator*(const Fp& a, const Fp& b) { return from_raw(mont_mul(a.v_, b.v_)); }
  constexpr Fp& operator*=(const Fp& b) {
    v_ = mont_mul(v_, b.v_);
    return *this;
  }
  constexpr Fp square() const { return *this * *this; }
  constexpr Fp dbl() const { return *this + *this; }

  template <std::size_t N>
  constexpr Fp pow(const BigInt<N>& e) const {
    Fp acc = one();
    for (std::size_t i = e.num_bits(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }
  constexpr Fp pow(std::uint64_t e) const { return pow(BigInt<1>::from_u64(e)); }

  // Fermat inverse; zero maps to zero.
  constexpr Fp inverse() const {
    Int e = kModulus;
    e.sub(Int::from_u64(2));
    return pow(e);
  }

  // Raw Montgomery limbs; for hashing/equality tables only.
  constexpr const Int& montgomery() const { return v_; }

 private:
  static constexpr Fp from_raw(const Int& v) {
    Fp out;
    out.v_ = v;
    return out;
  }

  // CIOS Montgomery multiplication a*b*R^{-1} mod p, using the carry-free
  // variant valid when the top modulus limb is below 2^63 - 1.
  static constexpr Int mont_mul(const Int& a, const Int& b) {
    static_assert(kModulus.limbs[3] < 0x7fffffffffffffffULL);
    const auto& p = kModulus.limbs;
    std::uint64_t t0 = 0, t1 = 0, t2 = 0, t3 = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const std::uint64_t bi = b.limbs[i];
      u128 s = u128(a.limbs[0]) * bi + t0;
      std::uint64_t carry_a = static_cast<std::uint64_t>(s >> 64);
      t0 = static_cast<std::uint64_t>(s);
      const std::uint64_t m = t0 * kInv;
      u128 r = u128(m) * p[0] + t0;
      std::uint64_t carry_m = static_cast<std::uint64_t>(r >> 64);

      s = u128(a.limbs[1]) * bi + t1 + carry_a;
      carry_a = static_cast<std::uint64_t>(s >> 64);
      r = u128(m) * p[1] + static_cast<std::uint64_t>(s) + carry_m;
      carry_m = static_cast<std::uint64_t>(r >> 64);
      t0 = static_cast<std::uint64_t>(r);

      s = u128(a.limbs[2]) * bi + t2 + carry_a;
      carry_a = static_cast<std::uint64_t>(s >> 64);
      r = u128(m) * p[2] + static_cast<std::uint64_t>(s) + carry_m;
      carry_m = static_cast<std::uint64_t>(r >> 64);
      t1 = static_cast<std::uint64_t>(r);

      s = u128(a.limbs[3]) * bi + t3 + carry_a;
      carry_a = static_cast<std::uint64_t>(s >> 64);
      r = u128(m) * p[3] + static_cast<std::uint64_t>(s) + carry_m;
      carry_m = static_cast<std::uint64_t>(r >> 64);
      t2 = static_cast<std::uint64_t>(r);

      t3 = carry_a + carry_m;
    }
    Int out;
    out.limbs = {t0, t1, t2, t3};
    if (out >= kModulus) out.sub(kModulus);
    return out;
  }

  Int v_{};
};

}  // namespace zkc::math

#endif  // ZKC_MATH_FP_HPP_
