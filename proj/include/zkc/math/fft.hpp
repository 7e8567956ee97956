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

#ifndef ZKC_MATH_FFT_HPP_
#define ZKC_MATH_FFT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "zkc/math/bn254_fields.hpp"

namespace zkc::math {

using bn254::Fr;

// Multiplicative generator of Fr^*; also the coset shift for quotient evaluation.
inline Fr fr_generator() { return Fr::from_u64(5); }

inline constexpr std::size_t kFrTwoAdicity = 28;

// Radix-2 evaluation domain {omega^i} of size 2^k over Fr.
class EvaluationDomain {
 public:
  explicit EvaluationDomain(std::size_t min_size) {
    size_ = 1;
    log_size_ = 0;
    while (size_ < min_size) {
      size_ <<= 1;
      ++log_size_;
    }
    if (log_size_ > kFrTwoAdicity) throw std::length_error("domain exceeds 2-adicity of Fr");
    BigInt<4> e = bn254::FrParams::kModulus;
    e.sub(BigInt<4>::from_u64(1));
    for (std::size_t i = 0; i < log_size_; ++i) e.shr1();
    omega_ = fr_generator().pow(e);
    omega_inv_ = omega_.inverse();
    size_inv_ = Fr::from_u64(size_).inverse();
  }

  std::size_t size() const { return size_; }
  std::size_t log_size() const { return log_size_; }
  const Fr& omega() const { return omega_; }

  // Coefficients -> evaluations at omega^i (in place).
  void fft(std::span<Fr> a) const { transform(a, omega_); }
  // Evaluations -> coefficients (in place).
  void ifft(std::span<Fr> a) const {
    transform(a, omega_inv_);
    for (auto& x : a) x *= size_inv_;
  }
  // Coefficients of p(X) -> evaluations of p at shift * omega^i.
  void coset_fft(std::span<Fr> a, const Fr& shift) const {
    Fr g = Fr::one();
    for (auto& x : a) {
      x *= g;
      g *= shift;
    }
    fft(a);
  }
  void coset_ifft(std::span<Fr> a, const Fr& shift) const {
    ifft(a);
    Fr ginv = shift.inverse();
    Fr g = Fr::one();
    for (auto& x : a) {
      x *= g;
      g *= ginv;
    }
  }

  // Z(X) = X^n - 1 evaluated at `x`.
  Fr vanishing_at(const Fr& x) const { return x.pow(static_cast<std::uint64_t>(size_)) - Fr::one(); }

  // All Lagrange basis polynomials L_i evaluated at `tau` (tau outside the domain).
  std::vector<Fr> lagrange_at(const Fr& tau) const {
    std::vector<Fr> out(size_);
    Fr z = vanishing_at(tau);
    std::vector<Fr> denom(size_);
    Fr w = Fr::one();
    for (std::size_t i = 0; i < size_; ++i) {
      denom[i] = tau - w;
      w *= omega_;
    }
    // Batch inversion of the denominators.
    std::vector<Fr> prefix(size_);
    Fr acc = Fr::one();
    for (std::size_t i = 0; i < size_; ++i) {
      prefix[i] = acc;
      acc *= denom[i];
    }
    Fr inv = acc.inverse();
    for (std::size_t i = size_; i-- > 0;) {
      Fr d_inv = inv * prefix[i];
      inv *= denom[i];
      denom[i] = d_inv;
    }
    Fr scale = z * size_inv_;
    w = Fr::one();
    for (std::size_t i = 0; i < size_; ++i) {
      out[i] = scale * w * denom[i];
      w *= omega_;
    }
    return out;
  }

 private:
  void transform(std::span<Fr> a, const Fr& root) const {
    const std::size_t n = a.size();
    if (n != size_) throw std::invalid_argument("fft input size mismatch");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      Fr wlen = root.pow(static_cast<std::uint64_t>(n / len));
      for (std::size_t i = 0; i < n; i += len) {
        Fr w = Fr::one();
        for (std::size_t k = 0; k < len / 2; ++k) {
          Fr u = a[i + k];
          Fr v = a[i + k + len / 2] * w;
          a[i + k] = u + v;
          a[i + k + len / 2] = u - v;
          w *= wlen;
        }
      }
    }
  }

  std::size_t size_;
  std::size_t log_size_;
  Fr omega_, omega_inv_, size_inv_;
};

}  // namespace zkc::math

#endif  // ZKC_MATH_FFT_HPP_
