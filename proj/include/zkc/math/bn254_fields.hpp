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

#ifndef ZKC_MATH_BN254_FIELDS_HPP_
#define ZKC_MATH_BN254_FIELDS_HPP_

#include "zkc/math/bigint.hpp"
#include "zkc/math/fp.hpp"

// Field tower of the BN254 (alt_bn128) pairing-friendly curve:
//   Fq2  = Fq[u]  / (u^2 + 1)
//   Fq6  = Fq2[v] / (v^3 - xi),  xi = 9 + u
//   Fq12 = Fq6[w] / (w^2 - v)
namespace zkc::bn254 {

using math::BigInt;

struct FqParams {
  static constexpr BigInt<4> kModulus = BigInt<4>::parse(
      "21888242871839275222246405745257275088696311157297823662689037894645226208583");
};
struct FrParams {
  static constexpr BigInt<4> kModulus = BigInt<4>::parse(
      "21888242871839275222246405745257275088548364400416034343698204186575808495617");
};

// Base field of the curve.
using Fq = math::Fp<FqParams>;
// Scalar field; the proving field of every circuit in this library.
using Fr = math::Fp<FrParams>;

struct Fq2 {
  Fq c0, c1;

  static constexpr Fq2 zero() { return {}; }
  static constexpr Fq2 one() { return {Fq::one(), Fq::zero()}; }
  constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend constexpr bool operator==(const Fq2&, const Fq2&) = default;

  friend constexpr Fq2 operator+(const Fq2& a, const Fq2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
  friend constexpr Fq2 operator-(const Fq2& a, const Fq2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
  constexpr Fq2 operator-() const { return {-c0, -c1}; }
  friend constexpr Fq2 operator*(const Fq2& a, const Fq2& b) {
    Fq v0 = a.c0 * b.c0;
    Fq v1 = a.c1 * b.c1;
    return {v0 - v1, (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1};
  }
  friend constexpr Fq2 operator*(const Fq2& a, const Fq& s) { return {a.c0 * s, a.c1 * s}; }
  Fq2& operator+=(const Fq2& b) { return *this = *this + b; }
  Fq2& operator-=(const Fq2& b) { return *this = *this - b; }
  Fq2& operator*=(const Fq2& b) { return *this = *this * b; }

  constexpr Fq2 square() const {
    Fq ab = c0 * c1;
    return {(c0 + c1) * (c0 - c1), ab + ab};
  }
  constexpr Fq2 dbl() const { return *this + *this; }
  constexpr Fq2 conjugate() const { return {c0, -c1}; }
  constexpr Fq2 inverse() const {
    Fq t = (c0.square() + c1.square()).inverse();
    return {c0 * t, -(c1 * t)};
  }
  // Multiplication by xi = 9 + u.
  constexpr Fq2 mul_by_xi() const {
    Fq nine_c0 = c0.dbl().dbl().dbl() + c0;
    Fq nine_c1 = c1.dbl().dbl().dbl() + c1;
    return {nine_c0 - c1, nine_c1 + c0};
  }
  template <std::size_t N>
  Fq2 pow(const BigInt<N>& e) const {
    Fq2 acc = one();
    for (std::size_t i = e.num_bits(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }
};

struct Fq6 {
  Fq2 c0, c1, c2;

  static constexpr Fq6 zero() { return {}; }
  static constexpr Fq6 one() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }
  constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  friend constexpr bool operator==(const Fq6&, const Fq6&) = default;

  friend constexpr Fq6 operator+(const Fq6& a, const Fq6& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
  }
  friend constexpr Fq6 operator-(const Fq6& a, const Fq6& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }
  constexpr Fq6 operator-() const { return {-c0, -c1, -c2}; }
  friend constexpr Fq6 operator*(const Fq6& a, const Fq6& b) {
    Fq2 v0 = a.c0 * b.c0;
    Fq2 v1 = a.c1 * b.c1;
    Fq2 v2 = a.c2 * b.c2;
    Fq2 t0 = ((a.c1 + a.c2) * (b.c1 + b.c2) - v1 - v2).mul_by_xi() + v0;
    Fq2 t1 = (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1 + v2.mul_by_xi();
    Fq2 t2 = (a.c0 + a.c2) * (b.c0 + b.c2) - v0 - v2 + v1;
    return {t0, t1, t2};
  }
  Fq6& operator*=(const Fq6& b) { return *this = *this * b; }
  constexpr Fq6 square() const { return *this * *this; }
  // Multiplication by v: (c0, c1, c2) -> (xi*c2, c0, c1).
  constexpr Fq6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }
  constexpr Fq6 inverse() const {
    Fq2 t0 = c0.square() - (c1 * c2).mul_by_xi();
    Fq2 t1 = c2.square().mul_by_xi() - c0 * c1;
    Fq2 t2 = c1.square() - c0 * c2;
    Fq2 det = c0 * t0 + (c2 * t1).mul_by_xi() + (c1 * t2).mul_by_xi();
    Fq2 inv = det.inverse();
    return {t0 * inv, t1 * inv, t2 * inv};
  }
};

struct Fq12 {
  Fq6 c0, c1;

  static constexpr Fq12 one() { return {Fq6::one(), Fq6::zero()}; }
  friend constexpr bool operator==(const Fq12&, const Fq12&) = default;
  constexpr bool is_one() const { return *this == one(); }

  friend constexpr Fq12 operator*(const Fq12& a, const Fq12& b) {
    Fq6 v0 = a.c0 * b.c0;
    Fq6 v1 = a.c1 * b.c1;
    return {v0 + v1.mul_by_v(), (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1};
  }
  Fq12& operator*=(const Fq12& b) { return *this = *this * b; }
  constexpr Fq12 square() const {
    Fq6 ab = c0 * c1;
    Fq6 t = (c0 + c1) * (c0 + c1.mul_by_v()) - ab - ab.mul_by_v();
    return {t, ab + ab};
  }
  // The p^6-power Frobenius: w -> -w.
  constexpr Fq12 conjugate() const { return {c0, -c1}; }
  constexpr Fq12 inverse() const {
    Fq6 t = (c0.square() - c1.square().mul_by_v()).inverse();
    return {c0 * t, -(c1 * t)};
  }
  template <std::size_t N>
  Fq12 pow(const BigInt<N>& e) const {
    Fq12 acc = one();
    for (std::size_t i = e.num_bits(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }
};

}  // namespace zkc::bn254

#endif  // ZKC_MATH_BN254_FIELDS_HPP_
