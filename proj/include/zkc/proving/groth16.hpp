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

#ifndef ZKC_PROVING_GROTH16_HPP_
#define ZKC_PROVING_GROTH16_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "zkc/circuit/r1cs.hpp"
#include "zkc/common/bytes.hpp"
#include "zkc/common/crypto.hpp"
#include "zkc/common/error.hpp"
#include "zkc/math/bn254_curve.hpp"
#include "zkc/math/fft.hpp"
#include "zkc/math/msm.hpp"
#include "zkc/math/pairing.hpp"

// Groth16 over BN254 for rank-1 constraint systems.
//
// Setup is a single-party local key generation: whoever runs it learns the
// toxic waste (tau, alpha, beta, gamma, delta) and can forge proofs. It is
// suitable for tests and demos only.
namespace zkc::proving::groth16 {

using bn254::Fq;
using bn254::Fr;
using bn254::G1;
using bn254::G1Affine;
using bn254::G2;
using bn254::G2Affine;
using circuit::ConstraintSystem;

struct ProvingKey {
  std::uint32_t num_variables = 0;
  std::uint32_t num_public = 0;
  std::uint32_t domain_size = 0;
  G1Affine alpha_g1, beta_g1, delta_g1;
  G2Affine beta_g2, delta_g2;
  std::vector<G1Affine> a_query;     // u_i(tau), all variables
  std::vector<G1Affine> b_g1_query;  // v_i(tau)
  std::vector<G2Affine> b_g2_query;  // v_i(tau)
  std::vector<G1Affine> h_query;     // tau^k Z(tau) / delta, k < domain_size - 1
  std::vector<G1Affine> l_query;     // (beta u_i + alpha v_i + w_i) / delta, private i
};

struct VerifyingKey {
  G1Affine alpha_g1;
  G2Affine beta_g2, gamma_g2, delta_g2;
  std::vector<G1Affine> ic;  // (beta u_i + alpha v_i + w_i) / gamma, i <= num_public
};

struct Proof {
  G1Affine a;
  G2Affine b;
  G1Affine c;
};

inline constexpr std::size_t kProofBytes = 2 * bn254::kG1Bytes + bn254::kG2Bytes;

struct KeyPair {
  ProvingKey pk;
  VerifyingKey vk;
};

namespace internal {

// Uniform nonzero Fr element from the random source.
inline Fr random_nonzero(RandomSource& rng) {
  for (;;) {
    std::array<std::uint8_t, 32> buf;
    rng.fill(buf);
    buf[0] &= 0x3f;  // 254-bit candidates
    Fr out;
    if (Fr::from_be_bytes_canonical(buf, out) && !out.is_zero()) return out;
  }
}

template <class Curve>
std::vector<math::AffinePoint<typename Curve::Field>> fixed_base_batch(
    const math::AffinePoint<typename Curve::Field>& base, std::span<const Fr> scalars) {
  math::FixedBaseTable<Curve> table(base, Fr::kBits);
  std::vector<math::JacobianPoint<Curve>> pts;
  pts.reserve(scalars.size());
  for (const Fr& s : scalars) pts.push_back(table.mul(s.to_int()));
  return math::batch_to_affine(pts);
}

inline std::vector<math::BigInt<4>> to_ints(std::span<const Fr> xs) {
  std::vector<math::BigInt<4>> out;
  out.reserve(xs.size());
  for (const Fr& x : xs) out.push_back(x.to_int());
  return out;
}

}  // namespace internal

inline KeyPair setup(const ConstraintSystem& cs, RandomSource& rng) {
  const std::size_t m = cs.num_variables;
  const std::size_t l = cs.num_public();
  math::EvaluationDomain domain(cs.num_constraints() < 2 ? 2 : cs.num_constraints());
  const std::size_t n = domain.size();

  Fr tau;
  do {
    tau = internal::random_nonzero(rng);
  } while (domain.vanishing_at(tau).is_zero());
  const Fr alpha = internal::random_nonzero(rng);
  const Fr beta = internal::random_nonzero(rng);
  const Fr gamma = internal::random_nonzero(rng);
  const Fr delta = internal::random_nonzero(rng);

  // QAP polynomials evaluated at tau via the Lagrange basis of the domain.
  std::vector<Fr> lag = domain.lagrange_at(tau);
  std::vector<Fr> u(m), v(m), w(m);
  for (std::size_t j = 0; j < cs.num_constraints(); ++j) {
    const auto& c = cs.constraints[j];
    for (const auto& t : c.a.terms()) u[t.var] += t.coeff * lag[j];
    for (const auto& t : c.b.terms()) v[t.var] += t.coeff * lag[j];
    for (const auto& t : c.c.terms()) w[t.var] += t.coeff * lag[j];
  }

  const Fr gamma_inv = gamma.inverse();
  const Fr delta_inv = delta.inverse();
  std::vector<Fr> ic_scalars, l_scalars;
  for (std::size_t i = 0; i < m; ++i) {
    Fr k = beta * u[i] + alpha * v[i] + w[i];
    if (i <= l) {
      ic_scalars.push_back(k * gamma_inv);
    } else {
      l_scalars.push_back(k * delta_inv);
    }
  }
  std::vector<Fr> h_scalars(n - 1);
  Fr zt_delta = domain.vanishing_at(tau) * delta_inv;
  Fr tp = Fr::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h_scalars[k] = tp * zt_delta;
    tp *= tau;
  }

  const G1Affine& g1 = bn254::g1_generator();
  const G2Affine& g2 = bn254::g2_generator();
  KeyPair kp;
  ProvingKey& pk = kp.pk;
  pk.num_variables = static_cast<std::uint32_t>(m);
  pk.num_public = static_cast<std::uint32_t>(l);
  pk.domain_size = static_cast<std::uint32_t>(n);
  std::vector<Fr> g1_misc = {alpha, beta, delta};
  auto misc1 = internal::fixed_base_batch<bn254::G1Curve>(g1, g1_misc);
  pk.alpha_g1 = misc1[0];
  pk.beta_g1 = misc1[1];
  pk.delta_g1 = misc1[2];
  std::vector<Fr> g2_misc = {beta, delta, gamma};
  auto misc2 = internal::fixed_base_batch<bn254::G2Curve>(g2, g2_misc);
  pk.beta_g2 = misc2[0];
  pk.delta_g2 = misc2[1];
  pk.a_query = internal::fixed_base_batch<bn254::G1Curve>(g1, u);
  pk.b_g1_query = internal::fixed_base_batch<bn254::G1Curve>(g1, v);
  pk.b_g2_query = internal::fixed_base_batch<bn254::G2Curve>(g2, v);
  pk.h_query = internal::fixed_base_batch<bn254::G1Curve>(g1, h_scalars);
  pk.l_query = internal::fixed_base_batch<bn254::G1Curve>(g1, l_scalars);

  VerifyingKey& vk = kp.vk;
  vk.alpha_g1 = pk.alpha_g1;
  vk.beta_g2 = pk.beta_g2;
  vk.gamma_g2 = misc2[2];
  vk.delta_g2 = pk.delta_g2;
  vk.ic = internal::fixed_base_batch<bn254::G1Curve>(g1, ic_scalars);
  return kp;
}

// Proves knowledge of the satisfying assignment `z` (z[0] == 1). The caller
// has already checked satisfiability.
inline Proof prove(const ProvingKey& pk, const ConstraintSystem& cs, std::span<const Fr> z, RandomSource& rng) {
  if (z.size() != pk.num_variables || cs.num_variables != pk.num_variables) {
    throw Error(ErrorCode::kShapeMismatch, "assignment size does not match proving key");
  }
  math::EvaluationDomain domain(pk.domain_size);
  const std::size_t n = domain.size();
  std::vector<Fr> a(n), b(n), c(n);
  for (std::size_t j = 0; j < cs.num_constraints(); ++j) {
    a[j] = cs.constraints[j].a.evaluate(z);
    b[j] = cs.constraints[j].b.evaluate(z);
    c[j] = cs.constraints[j].c.evaluate(z);
  }
  domain.ifft(a);
  domain.ifft(b);
  domain.ifft(c);
  const Fr shift = math::fr_generator();
  domain.coset_fft(a, shift);
  domain.coset_fft(b, shift);
  domain.coset_fft(c, shift);
  const Fr z_inv = domain.vanishing_at(shift).inverse();
  std::vector<Fr> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = (a[i] * b[i] - c[i]) * z_inv;
  domain.coset_ifft(h, shift);
  h.resize(n - 1);

  const auto zi = internal::to_ints(z);
  const auto hi = internal::to_ints(h);
  std::span<const math::BigInt<4>> z_priv(zi.begin() + 1 + pk.num_public, zi.end());

  const Fr r = internal::random_nonzero(rng);
  const Fr s = internal::random_nonzero(rng);

  G1 a_acc = G1(pk.alpha_g1) + math::msm<bn254::G1Curve, 4>(pk.a_query, zi) + G1(pk.delta_g1) * r;
  G2 b_acc = G2(pk.beta_g2) + math::msm<bn254::G2Curve, 4>(pk.b_g2_query, zi) + G2(pk.delta_g2) * s;
  G1 b1_acc = G1(pk.beta_g1) + math::msm<bn254::G1Curve, 4>(pk.b_g1_query, zi) + G1(pk.delta_g1) * s;
  G1 c_acc = math::msm<bn254::G1Curve, 4>(pk.l_query, z_priv) + math::msm<bn254::G1Curve, 4>(pk.h_query, hi) +
             a_acc * s + b1_acc * r - G1(pk.delta_g1) * (r * s);
  return {a_acc.to_affine(), b_acc.to_affine(), c_acc.to_affine()};
}

inline bool verify(const VerifyingKey& vk, std::span<const Fr> public_inputs, const Proof& proof) {
  if (public_inputs.size() + 1 != vk.ic.size()) return false;
  G1 acc(vk.ic[0]);
  for (std::size_t i = 0; i < public_inputs.size(); ++i) acc += G1(vk.ic[i + 1]) * public_inputs[i];
  G1Affine neg_a = proof.a;
  if (!neg_a.infinity) neg_a.y = -neg_a.y;
  const std::pair<G1Affine, G2Affine> pairs[] = {
      {neg_a, proof.b}, {vk.alpha_g1, vk.beta_g2}, {acc.to_affine(), vk.gamma_g2}, {proof.c, vk.delta_g2}};
  return bn254::pairing_product_is_one(pairs);
}

// ---- encoding -------------------------------------------------------------

namespace internal {
inline void put_g1(ByteWriter& w, const G1Affine& p) {
  std::array<std::uint8_t, bn254::kG1Bytes> buf;
  bn254::write_g1(p, buf);
  w.raw(buf);
}
inline void put_g2(ByteWriter& w, const G2Affine& p) {
  std::array<std::uint8_t, bn254::kG2Bytes> buf;
  bn254::write_g2(p, buf);
  w.raw(buf);
}
inline G1Affine get_g1(ByteReader& r, ErrorCode err) {
  G1Affine p;
  if (!bn254::read_g1(r.raw(bn254::kG1Bytes), p)) throw Error(err, "invalid G1 point");
  return p;
}
inline G2Affine get_g2(ByteReader& r, ErrorCode err) {
  G2Affine p;
  if (!bn254::read_g2(r.raw(bn254::kG2Bytes), p)) throw Error(err, "invalid G2 point");
  return p;
}
inline void put_g1s(ByteWriter& w, const std::vector<G1Affine>& v) {
  w.u32(static_cast<std::uint32_t>(v.size()));
  for (const auto& p : v) put_g1(w, p);
}
inline std::vector<G1Affine> get_g1s(ByteReader& r, ErrorCode err) {
  std::uint32_t n = r.u32();
  if (static_cast<std::size_t>(n) * bn254::kG1Bytes > r.remaining()) throw Error(err, "truncated point list");
  std::vector<G1Affine> v;
  v.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) v.push_back(get_g1(r, err));
  return v;
}
}  // namespace internal

inline Bytes encode_proof(const Proof& p) {
  ByteWriter w;
  internal::put_g1(w, p.a);
  internal::put_g2(w, p.b);
  internal::put_g1(w, p.c);
  return std::move(w).take();
}

inline Proof decode_proof(ByteView data) {
  if (data.size() != kProofBytes) throw Error(ErrorCode::kMalformedProof, "groth16 proof size");
  ByteReader r(data);
  Proof p;
  p.a = internal::get_g1(r, ErrorCode::kMalformedProof);
  p.b = internal::get_g2(r, ErrorCode::kMalformedProof);
  p.c = internal::get_g1(r, ErrorCode::kMalformedProof);
  return p;
}

inline Bytes encode_vk(const VerifyingKey& vk) {
  ByteWriter w;
  internal::put_g1(w, vk.alpha_g1);
  internal::put_g2(w, vk.beta_g2);
  internal::put_g2(w, vk.gamma_g2);
  internal::put_g2(w, vk.delta_g2);
  internal::put_g1s(w, vk.ic);
  return std::move(w).take();
}

inline VerifyingKey decode_vk(ByteView data) {
  constexpr ErrorCode kErr = ErrorCode::kMalformedKey;
  ByteReader r(data);
  VerifyingKey vk;
  vk.alpha_g1 = internal::get_g1(r, kErr);
  vk.beta_g2 = internal::get_g2(r, kErr);
  vk.gamma_g2 = internal::get_g2(r, kErr);
  vk.delta_g2 = internal::get_g2(r, kErr);
  vk.ic = internal::get_g1s(r, kErr);
  if (!r.ok_and_done() || vk.ic.empty()) throw Error(kErr, "groth16 verifying key encoding");
  return vk;
}

inline Bytes encode_pk(const ProvingKey& pk) {
  ByteWriter w;
  w.u32(pk.num_variables);
  w.u32(pk.num_public);
  w.u32(pk.domain_size);
  internal::put_g1(w, pk.alpha_g1);
  internal::put_g1(w, pk.beta_g1);
  internal::put_g1(w, pk.delta_g1);
  internal::put_g2(w, pk.beta_g2);
  internal::put_g2(w, pk.delta_g2);
  internal::put_g1s(w, pk.a_query);
  internal::put_g1s(w, pk.b_g1_query);
  w.u32(static_cast<std::uint32_t>(pk.b_g2_query.size()));
  for (const auto& p : pk.b_g2_query) internal::put_g2(w, p);
  internal::put_g1s(w, pk.h_query);
  internal::put_g1s(w, pk.l_query);
  return std::move(w).take();
}

inline ProvingKey decode_pk(ByteView data) {
  constexpr ErrorCode kErr = ErrorCode::kMalformedKey;
  ByteReader r(data);
  ProvingKey pk;
  pk.num_variables = r.u32();
  pk.num_public = r.u32();
  pk.domain_size = r.u32();
  pk.alpha_g1 = internal::get_g1(r, kErr);
  pk.beta_g1 = internal::get_g1(r, kErr);
  pk.delta_g1 = internal::get_g1(r, kErr);
  pk.beta_g2 = internal::get_g2(r, kErr);
  pk.delta_g2 = internal::get_g2(r, kErr);
  pk.a_query = internal::get_g1s(r, kErr);
  pk.b_g1_query = internal::get_g1s(r, kErr);
  std::uint32_t nb = r.u32();
  if (static_cast<std::size_t>(nb) * bn254::kG2Bytes > r.remaining()) throw Error(kErr, "truncated point list");
  for (std::uint32_t i = 0; i < nb; ++i) pk.b_g2_query.push_back(internal::get_g2(r, kErr));
  pk.h_query = internal::get_g1s(r, kErr);
  pk.l_query = internal::get_g1s(r, kErr);
  const bool shape_ok = pk.a_query.size() == pk.num_variables && pk.b_g1_query.size() == pk.num_variables &&
                        pk.b_g2_query.size() == pk.num_variables && pk.domain_size >= 2 &&
                        pk.h_query.size() + 1 == pk.domain_size &&
                        pk.l_query.size() + 1 + pk.num_public == pk.num_variables;
  if (!r.ok_and_done() || !shape_ok) throw Error(kErr, "groth16 proving key encoding");
  return pk;
}

}  // namespace zkc::proving::groth16

#endif  // ZKC_PROVING_GROTH16_HPP_
