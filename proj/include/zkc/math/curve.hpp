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

#ifndef ZKC_MATH_CURVE_HPP_
#define ZKC_MATH_CURVE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "zkc/math/bigint.hpp"

namespace zkc::math {

template <class F>
struct AffinePoint {
  F x{}, y{};
  bool infinity = true;

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

// Short Weierstrass curve y^2 = x^3 + b (a = 0) in Jacobian coordinates.
// `Curve` supplies `using Field = ...` and `static Field b()`.
template <class Curve>
class JacobianPoint {
 public:
  using F = typename Curve::Field;
  using Affine = AffinePoint<F>;

  JacobianPoint() : x_(F::one()), y_(F::one()), z_(F::zero()) {}
  JacobianPoint(const F& x, const F& y, const F& z) : x_(x), y_(y), z_(z) {}
  explicit JacobianPoint(const Affine& p)
      : x_(p.infinity ? F::one() : p.x), y_(p.infinity ? F::one() : p.y),
        z_(p.infinity ? F::zero() : F::one()) {}

  static JacobianPoint identity() { return {}; }
  bool is_identity() const { return z_.is_zero(); }

  const F& x() const { return x_; }
  const F& y() const { return y_; }
  const F& z() const { return z_; }

  static bool on_curve(const Affine& p) {
    if (p.infinity) return true;
    return p.y.square() == p.x.square() * p.x + Curve::b();
  }

  Affine to_affine() const {
    if (is_identity()) return {};
    F zinv = z_.inverse();
    F zinv2 = zinv.square();
    return {x_ * zinv2, y_ * zinv2 * zinv, false};
  }

  JacobianPoint dbl() const {
    if (is_identity()) return *this;
    // dbl-2009-l
    F a = x_.square();
    F b = y_.square();
    F c = b.square();
    F d = ((x_ + b).square() - a - c).dbl();
    F e = a.dbl() + a;
    F f = e.square();
    F x3 = f - d.dbl();
    F c8 = c.dbl().dbl().dbl();
    F y3 = e * (d - x3) - c8;
    F z3 = (y_ * z_).dbl();
    return {x3, y3, z3};
  }

  friend JacobianPoint operator+(const JacobianPoint& p, const JacobianPoint& q) {
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    // add-2007-bl
    F z1z1 = p.z_.square();
    F z2z2 = q.z_.square();
    F u1 = p.x_ * z2z2;
    F u2 = q.x_ * z1z1;
    F s1 = p.y_ * q.z_ * z2z2;
    F s2 = q.y_ * p.z_ * z1z1;
    if (u1 == u2) {
      if (s1 == s2) return p.dbl();
      return identity();
    }
    F h = u2 - u1;
    F i = h.dbl().square();
    F j = h * i;
    F r = (s2 - s1).dbl();
    F v = u1 * i;
    F x3 = r.square() - j - v.dbl();
    F y3 = r * (v - x3) - (s1 * j).dbl();
    F z3 = ((p.z_ + q.z_).square() - z1z1 - z2z2) * h;
    return {x3, y3, z3};
  }

  // Mixed addition with an affine point (madd-2007-bl).
  JacobianPoint add_affine(const Affine& q) const {
    if (q.infinity) return *this;
    if (is_identity()) return JacobianPoint(q);
    F z1z1 = z_.square();
    F u2 = q.x * z1z1;
    F s2 = q.y * z_ * z1z1;
    if (x_ == u2) {
      if (y_ == s2) return dbl();
      return identity();
    }
    F h = u2 - x_;
    F hh = h.square();
    F i = hh.dbl().dbl();
    F j = h * i;
    F r = (s2 - y_).dbl();
    F v = x_ * i;
    F x3 = r.square() - j - v.dbl();
    F y3 = r * (v - x3) - (y_ * j).dbl();
    F z3 = (z_ + h).square() - z1z1 - hh;
    return {x3, y3, z3};
  }

  JacobianPoint operator-() const { return {x_, -y_, z_}; }
  friend JacobianPoint operator-(const JacobianPoint& p, const JacobianPoint& q) { return p + (-q); }
  JacobianPoint& operator+=(const JacobianPoint& q) { return *this = *this + q; }

  template <std::size_t N>
  JacobianPoint mul(const BigInt<N>& k) const {
    JacobianPoint acc;
    for (std::size_t i = k.num_bits(); i-- > 0;) {
      acc = acc.dbl();
      if (k.bit(i)) acc += *this;
    }
    return acc;
  }

  friend bool operator==(const JacobianPoint& p, const JacobianPoint& q) {
    if (p.is_identity() || q.is_identity()) return p.is_identity() == q.is_identity();
    F z1z1 = p.z_.square();
    F z2z2 = q.z_.square();
    return p.x_ * z2z2 == q.x_ * z1z1 && p.y_ * q.z_ * z2z2 == q.y_ * p.z_ * z1z1;
  }

 private:
  F x_, y_, z_;
};

// Converts many points to affine with a single field inversion.
template <class Curve>
std::vector<AffinePoint<typename Curve::Field>> batch_to_affine(
    const std::vector<JacobianPoint<Curve>>& points) {
  using F = typename Curve::Field;
  std::vector<AffinePoint<F>> out(points.size());
  std::vector<F> prefix(points.size());
  F acc = F::one();
  for (std::size_t i = 0; i < points.size(); ++i) {
    prefix[i] = acc;
    if (!points[i].is_identity()) acc *= points[i].z();
  }
  F inv = acc.inverse();
  for (std::size_t i = points.size(); i-- > 0;) {
    if (points[i].is_identity()) continue;
    F zinv = inv * prefix[i];
    inv *= points[i].z();
    F zinv2 = zinv.square();
    out[i] = {points[i].x() * zinv2, points[i].y() * zinv2 * zinv, false};
  }
  return out;
}

}  // namespace zkc::math

#endif  // ZKC_MATH_CURVE_HPP_
