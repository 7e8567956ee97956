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

#ifndef ZKC_MATH_BN254_CURVE_HPP_
#define ZKC_MATH_BN254_CURVE_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>

#include "zkc/math/bn254_fields.hpp"
#include "zkc/math/curve.hpp"

namespace zkc::bn254 {

struct G1Curve {
  using Field = Fq;
  static Fq b() { return Fq::from_u64(3); }
};

// D-type sextic twist E'/Fq2: y^2 = x^3 + 3/xi, untwisted by (x, y) -> (x w^2, y w^3).
struct G2Curve {
  using Field = Fq2;
  static const Fq2& b() {
    static const Fq2 kB = Fq2{Fq::from_u64(3), Fq::zero()} * Fq2{Fq::from_u64(9), Fq::one()}.inverse();
    return kB;
  }
};

using G1 = math::JacobianPoint<G1Curve>;
using G2 = math::JacobianPoint<G2Curve>;
using G1Affine = math::AffinePoint<Fq>;
using G2Affine = math::AffinePoint<Fq2>;

inline const G1Affine& g1_generator() {
  static const G1Affine kGen{Fq::from_u64(1), Fq::from_u64(2), false};
  return kGen;
}

inline const G2Affine& g2_generator() {
  static const G2Affine kGen{
      {Fq::parse("10857046999023057135944570762232829481370756359578518086990519993285655852781"),
       Fq::parse("11559732032986387107991004021392285783925812861821192530917403151452391805634")},
      {Fq::parse("8495653923123431417604973247489272438418190587263600148770280649306958101930"),
       Fq::parse("4082367875863433681332203403145435568316851327593401208105741076214120093531")},
      false};
  return kGen;
}

inline G1 operator*(const G1& p, const Fr& k) { return p.mul(k.to_int()); }
inline G2 operator*(const G2& p, const Fr& k) { return p.mul(k.to_int()); }

// Frobenius endomorphism on the twist: (x, y) -> (conj(x) * xi^((p-1)/3), conj(y) * xi^((p-1)/2)).
inline G2Affine g2_frobenius(const G2Affine& q) {
  static const auto kCoeffs = [] {
    BigInt<4> e3 = FqParams::kModulus;
    e3.sub(BigInt<4>::from_u64(1));
    BigInt<4> e2 = e3;
    e3.div_small(3);
    e2.div_small(2);
    Fq2 xi{Fq::from_u64(9), Fq::one()};
    return std::array<Fq2, 2>{xi.pow(e3), xi.pow(e2)};
  }();
  if (q.infinity) return q;
  return {q.x.conjugate() * kCoeffs[0], q.y.conjugate() * kCoeffs[1], false};
}

inline constexpr std::size_t kG1Bytes = 64;
inline constexpr std::size_t kG2Bytes = 128;

inline void write_g1(const G1Affine& p, std::span<std::uint8_t, kG1Bytes> out) {
  std::fill(out.begin(), out.end(), 0);
  if (p.infinity) return;
  auto x = p.x.to_be_bytes();
  auto y = p.y.to_be_bytes();
  std::copy(x.begin(), x.end(), out.begin());
  std::copy(y.begin(), y.end(), out.begin() + 32);
}

inline void write_g2(const G2Affine& p, std::span<std::uint8_t, kG2Bytes> out) {
  std::fill(out.begin(), out.end(), 0);
  if (p.infinity) return;
  const Fq* parts[4] = {&p.x.c1, &p.x.c0, &p.y.c1, &p.y.c0};
  for (int i = 0; i < 4; ++i) {
    auto b = parts[i]->to_be_bytes();
    std::copy(b.begin(), b.end(), out.begin() + 32 * i);
  }
}

namespace internal {
inline bool all_zero(std::span<const std::uint8_t> in) {
  for (auto b : in)
    if (b != 0) return false;
  return true;
}
}  // namespace internal

// Rejects non-canonical coordinates and points off the curve. G1 has cofactor 1.
inline bool read_g1(std::span<const std::uint8_t> in, G1Affine& out) {
  if (in.size() != kG1Bytes) return false;
  if (internal::all_zero(in)) {
    out = G1Affine{};
    return true;
  }
  G1Affine p;
  p.infinity = false;
  if (!Fq::from_be_bytes_canonical(in.subspan(0, 32), p.x)) return false;
  if (!Fq::from_be_bytes_canonical(in.subspan(32, 32), p.y)) return false;
  if (!G1::on_curve(p)) return false;
  out = p;
  return true;
}

inline bool g2_in_subgroup(const G2Affine& p) {
  return G2(p).mul(FrParams::kModulus).is_identity();
}

// Rejects non-canonical coordinates, points off the twist, and points outside
// the order-r subgroup.
inline bool read_g2(std::span<const std::uint8_t> in, G2Affine& out) {
  if (in.size() != kG2Bytes) return false;
  if (internal::all_zero(in)) {
    out = G2Affine{};
    return true;
  }
  G2Affine p;
  p.infinity = false;
  if (!Fq::from_be_bytes_canonical(in.subspan(0, 32), p.x.c1) ||
      !Fq::from_be_bytes_canonical(in.subspan(32, 32), p.x.c0) ||
      !Fq::from_be_bytes_canonical(in.subspan(64, 32), p.y.c1) ||
      !Fq::from_be_bytes_canonical(in.subspan(96, 32), p.y.c0)) {
    return false;
  }
  if (!G2::on_curve(p) || !g2_in_subgroup(p)) return false;
  out = p;
  return true;
}

}  // namespace zkc::bn254

#endif  // ZKC_MATH_BN254_CURVE_HPP_
