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

#ifndef ZKC_MATH_MSM_HPP_
#define ZKC_MATH_MSM_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "zkc/math/bigint.hpp"
#include "zkc/math/curve.hpp"

namespace zkc::math {

namespace internal {
inline std::size_t msm_window(std::size_t n) {
  if (n < 32) return 3;
  std::size_t log2n = 0;
  while ((std::size_t{1} << (log2n + 1)) <= n) ++log2n;
  return log2n > 3 ? log2n - 2 : 3;
}
}  // namespace internal

// Pippenger bucket-method multi-scalar multiplication: sum_i scalars[i] * bases[i].
template <class Curve, std::size_t N>
JacobianPoint<Curve> msm(std::span<const AffinePoint<typename Curve::Field>> bases,
                         std::span<const BigInt<N>> scalars) {
  using Point = JacobianPoint<Curve>;
  const std::size_t n = bases.size() < scalars.size() ? bases.size() : scalars.size();
  if (n == 0) return Point::identity();

  std::size_t max_bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t b = scalars[i].num_bits();
    if (b > max_bits) max_bits = b;
  }
  if (max_bits == 0) return Point::identity();

  const std::size_t c = internal::msm_window(n);
  const std::size_t windows = (max_bits + c - 1) / c;
  std::vector<Point> buckets((std::size_t{1} << c) - 1);

  Point acc = Point::identity();
  for (std::size_t w = windows; w-- > 0;) {
    for (std::size_t k = 0; k < c; ++k) acc = acc.dbl();
    std::fill(buckets.begin(), buckets.end(), Point::identity());
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t idx = scalars[i].bits(w * c, c);
      if (idx != 0) buckets[idx - 1] = buckets[idx - 1].add_affine(bases[i]);
    }
    Point running = Point::identity();
    Point window_sum = Point::identity();
    for (std::size_t j = buckets.size(); j-- > 0;) {
      running += buckets[j];
      window_sum += running;
    }
    acc += window_sum;
  }
  return acc;
}

// Precomputed window table for repeated multiplication of one fixed base.
template <class Curve>
class FixedBaseTable {
 public:
  using Point = JacobianPoint<Curve>;
  using Affine = AffinePoint<typename Curve::Field>;

  FixedBaseTable(const Affine& base, std::size_t scalar_bits, std::size_t window = 8)
      : window_(window), windows_((scalar_bits + window - 1) / window) {
    std::vector<Point> all;
    all.reserve(windows_ << window_);
    Point row_base(base);
    for (std::size_t w = 0; w < windows_; ++w) {
      Point cur = Point::identity();
      for (std::size_t j = 0; j < (std::size_t{1} << window_); ++j) {
        all.push_back(cur);
        cur += row_base;
      }
      row_base = cur;  // 2^window * previous row base
    }
    table_ = batch_to_affine(all);
  }

  template <std::size_t N>
  Point mul(const BigInt<N>& k) const {
    Point acc = Point::identity();
    for (std::size_t w = 0; w < windows_; ++w) {
      std::uint64_t idx = k.bits(w * window_, window_);
      if (idx != 0) acc = acc.add_affine(table_[(w << window_) + idx]);
    }
    return acc;
  }

 private:
  std::size_t window_;
  std::size_t windows_;
  std::vector<Affine> table_;
};

}  // namespace zkc::math

#endif  // ZKC_MATH_MSM_HPP_
