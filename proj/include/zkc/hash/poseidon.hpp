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

#ifndef ZKC_HASH_POSEIDON_HPP_
#define ZKC_HASH_POSEIDON_HPP_

#include <array>
#include <bitset>
#include <cstdint>
#include <string_view>
#include <vector>

#include "zkc/math/bn254_fields.hpp"

// Poseidon over the BN254 scalar field, width 3 (two inputs), x^5 S-box,
// 8 full and 57 partial rounds. Round constants and the Cauchy MDS matrix are
// derived with the Grain LFSR instantiation of the reference parameter
// generator, which yields the same permutation circomlib uses for
// Poseidon(2).
namespace zkc::hash {

using bn254::Fr;

inline constexpr std::string_view kPoseidonHashId = "poseidon-bn254-x5-t3-rf8-rp57";

struct PoseidonParams {
  static constexpr std::size_t kWidth = 3;
  static constexpr std::size_t kFullRounds = 8;
  static constexpr std::size_t kPartialRounds = 57;
  static constexpr std::size_t kRounds = kFullRounds + kPartialRounds;

  std::vector<Fr> round_constants;  // kRounds * kWidth, row-major by round
  std::array<std::array<Fr, kWidth>, kWidth> mds;

  static bool is_full_round(std::size_t r) {
    return r < kFullRounds / 2 || r >= kFullRounds / 2 + kPartialRounds;
  }
};

// Self-shrinking 80-bit Grain LFSR seeded with the parameter description.
class GrainLfsr {
 public:
  GrainLfsr(unsigned field, unsigned sbox, unsigned field_bits, unsigned width,
            unsigned full_rounds, unsigned partial_rounds) {
    std::size_t pos = 0;
    auto put = [&](std::uint64_t v, unsigned nbits) {
      for (unsigned i = nbits; i-- > 0;) state_[pos++] = (v >> i) & 1;
    };
    put(field, 2);
    put(sbox, 4);
    put(field_bits, 12);
    put(width, 12);
    put(full_rounds, 10);
    put(partial_rounds, 10);
    while (pos < 80) state_[pos++] = 1;
    for (int i = 0; i < 160; ++i) step();
  }

  bool next_bit() {
    for (;;) {
      bool first = step();
      bool second = step();
      if (first) return second;
    }
  }

  // `nbits` output bits read as a big-endian integer.
  math::BigInt<4> next_int(unsigned nbits) {
    math::BigInt<4> out;
    for (unsigned i = 0; i < nbits; ++i) {
      out.mul_small(2);
      out.add_small(next_bit() ? 1 : 0);
    }
    return out;
  }

 private:
  bool step() {
    bool nb = state_[(head_ + 62) % 80] ^ state_[(head_ + 51) % 80] ^ state_[(head_ + 38) % 80] ^
              state_[(head_ + 23) % 80] ^ state_[(head_ + 13) % 80] ^ state_[head_];
    state_[head_] = nb;
    head_ = (head_ + 1) % 80;
    return nb;
  }

  std::bitset<80> state_;
  std::size_t head_ = 0;
};

inline PoseidonParams generate_poseidon_params() {
  using P = PoseidonParams;
  constexpr unsigned kFieldBits = 254;
  GrainLfsr grain(1, 0, kFieldBits, P::kWidth, P::kFullRounds, P::kPartialRounds);
  PoseidonParams params;
  params.round_constants.reserve(P::kRounds * P::kWidth);
  for (std::size_t i = 0; i < P::kRounds * P::kWidth; ++i) {
    math::BigInt<4> v = grain.next_int(kFieldBits);
    while (v >= bn254::FrParams::kModulus) v = grain.next_int(kFieldBits);
    params.round_constants.push_back(Fr::from_int(v));
  }
  std::array<Fr, 2 * P::kWidth> xy;
  for (auto& e : xy) e = Fr::from_int(grain.next_int(kFieldBits));
  for (std::size_t i = 0; i < P::kWidth; ++i) {
    for (std::size_t j = 0; j < P::kWidth; ++j) {
      params.mds[i][j] = (xy[i] + xy[P::kWidth + j]).inverse();
    }
  }
  return params;
}

inline const PoseidonParams& poseidon_params() {
  static const PoseidonParams kParams = generate_poseidon_params();
  return kParams;
}

inline Fr pow5(const Fr& x) {
  Fr x2 = x.square();
  return x2.square() * x;
}

inline void poseidon_permute(std::array<Fr, PoseidonParams::kWidth>& state) {
  const PoseidonParams& params = poseidon_params();
  constexpr std::size_t t = PoseidonParams::kWidth;
  for (std::size_t r = 0; r < PoseidonParams::kRounds; ++r) {
    for (std::size_t i = 0; i < t; ++i) state[i] += params.round_constants[r * t + i];
    if (PoseidonParams::is_full_round(r)) {
      for (auto& s : state) s = pow5(s);
    } else {
      state[0] = pow5(state[0]);
    }
    std::array<Fr, t> mixed{};
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) mixed[i] += params.mds[i][j] * state[j];
    state = mixed;
  }
}

// Poseidon(a, b): permutation of [0, a, b], first lane out.
inline Fr poseidon2(const Fr& a, const Fr& b) {
  std::array<Fr, PoseidonParams::kWidth> state{Fr::zero(), a, b};
  poseidon_permute(state);
  return state[0];
}

// Binding, hiding commitment to an attribute value under a secret salt.
inline Fr commitment_hash(const Fr& value, const Fr& salt) { return poseidon2(value, salt); }

}  // namespace zkc::hash

#endif  // ZKC_HASH_POSEIDON_HPP_
