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

#ifndef ZKC_MATH_PAIRING_HPP_
#define ZKC_MATH_PAIRING_HPP_

#include <span>
#include <utility>

#include "zkc/math/bn254_curve.hpp"
#include "zkc/math/bn254_fields.hpp"

// Optimal ate pairing on BN254. The Miller loop walks the twist point in
// affine coordinates; lines are evaluated at P and embedded into Fq12.
namespace zkc::bn254 {

namespace pairing_detail {

// |6x + 2| for the BN parameter x = 4965661367192848881.
inline constexpr BigInt<2> kAteLoop = BigInt<2>::parse("29793968203157093288");

// (p^4 - p^2 + 1) / r
inline constexpr BigInt<12> kHardExponent = BigInt<12>::parse(
    "0x1baaa710b0759ad331ec15183177faf6c0eb522d5b122784e529a5861876f6b3b1b1355d189227d7958"
    "1e16f3fd90c66b887d56d5095f23aaa441e3954bcf8adcc7b44c87cdbacff1154e7e1da014fd5abf5cc4f4"
    "9c36d4e81bb482ccdf42b1");

// Line through T with twist-slope `lambda`, evaluated at P:
//   yP - lambda*xP*w + (lambda*xT - yT)*v*w
inline Fq12 sloped_line(const Fq2& lambda, const G2Affine& t, const G1Affine& p) {
  Fq12 out;
  out.c0.c0 = Fq2{p.y, Fq::zero()};
  out.c1.c0 = -(lambda * p.x);
  out.c1.c1 = lambda * t.x - t.y;
  return out;
}

// Vertical line x = xT evaluated at P: xP - xT*v.
inline Fq12 vertical_line(const G2Affine& t, const G1Affine& p) {
  Fq12 out;
  out.c0.c0 = Fq2{p.x, Fq::zero()};
  out.c0.c1 = -t.x;
  return out;
}

inline Fq12 double_step(G2Affine& t, const G1Affine& p) {
  if (t.infinity) return Fq12::one();
  if (t.y.is_zero()) {
    Fq12 l = vertical_line(t, p);
    t = G2Affine{};
    return l;
  }
  Fq2 x2 = t.x.square();
  Fq2 lambda = (x2.dbl() + x2) * t.y.dbl().inverse();
  Fq12 l = sloped_line(lambda, t, p);
  Fq2 x3 = lambda.square() - t.x.dbl();
  Fq2 y3 = lambda * (t.x - x3) - t.y;
  t = {x3, y3, false};
  return l;
}

inline Fq12 add_step(G2Affine& t, const G2Affine& q, const G1Affine& p) {
  if (q.infinity) return Fq12::one();
  if (t.infinity) {
    t = q;
    return Fq12::one();
  }
  if (t.x == q.x) {
    if (t.y == q.y) return double_step(t, p);
    Fq12 l = vertical_line(t, p);
    t = G2Affine{};
    return l;
  }
  Fq2 lambda = (q.y - t.y) * (q.x - t.x).inverse();
  Fq12 l = sloped_line(lambda, t, p);
  Fq2 x3 = lambda.square() - t.x - q.x;
  Fq2 y3 = lambda * (t.x - x3) - t.y;
  t = {x3, y3, false};
  return l;
}

}  // namespace pairing_detail

// Miller loop f_{6x+2,Q}(P) times the two Frobenius correction lines.
inline Fq12 miller_loop(const G1Affine& p, const G2Affine& q) {
  using namespace pairing_detail;
  if (p.infinity || q.infinity) return Fq12::one();
  G2Affine t = q;
  Fq12 f = Fq12::one();
  for (std::size_t i = kAteLoop.num_bits() - 1; i-- > 0;) {
    f = f.square() * double_step(t, p);
    if (kAteLoop.bit(i)) f *= add_step(t, q, p);
  }
  G2Affine q1 = g2_frobenius(q);
  G2Affine q2 = g2_frobenius(q1);
  q2.y = -q2.y;
  f *= add_step(t, q1, p);
  f *= add_step(t, q2, p);
  return f;
}

inline Fq12 final_exponentiation(const Fq12& f) {
  static const BigInt<8> kPSquared = FqParams::kModulus.mul_wide(FqParams::kModulus);
  Fq12 t = f.conjugate() * f.inverse();   // f^(p^6 - 1)
  t = t.pow(kPSquared) * t;               // ^(p^2 + 1)
  return t.pow(pairing_detail::kHardExponent);
}

inline Fq12 pairing(const G1Affine& p, const G2Affine& q) {
  return final_exponentiation(miller_loop(p, q));
}

// True iff prod_i e(P_i, Q_i) == 1, sharing one final exponentiation.
inline bool pairing_product_is_one(std::span<const std::pair<G1Affine, G2Affine>> pairs) {
  Fq12 acc = Fq12::one();
  for (const auto& [p, q] : pairs) acc *= miller_loop(p, q);
  return final_exponentiation(acc).is_one();
}

}  // namespace zkc::bn254

#endif  // ZKC_MATH_PAIRING_HPP_
