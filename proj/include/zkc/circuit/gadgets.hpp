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

#ifndef ZKC_CIRCUIT_GADGETS_HPP_
#define ZKC_CIRCUIT_GADGETS_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "zkc/circuit/r1cs.hpp"
#include "zkc/hash/poseidon.hpp"

namespace zkc::circuit {

// y = x^5 in three constraints.
inline LC pow5_gadget(R1csBuilder& b, const LC& x) {
  Fr xv = b.value(x);
  Variable x2 = b.witness(xv.square());
  b.enforce(x, x, x2);
  Variable x4 = b.witness(b.value(x2).square());
  b.enforce(x2, x2, x4);
  Variable y = b.witness(b.value(x4) * xv);
  b.enforce(x4, x, y);
  return y;
}

// In-circuit Poseidon(in0, in1); mirrors hash::poseidon2 round for round.
// Linear layers stay as linear combinations; only S-box outputs allocate.
inline LC poseidon2_gadget(R1csBuilder& b, const LC& in0, const LC& in1) {
  using hash::PoseidonParams;
  const PoseidonParams& params = hash::poseidon_params();
  constexpr std::size_t t = PoseidonParams::kWidth;
  std::array<LC, t> state{LC(), in0, in1};
  for (std::size_t r = 0; r < PoseidonParams::kRounds; ++r) {
    for (std::size_t i = 0; i < t; ++i) state[i] += LC::constant(params.round_constants[r * t + i]);
    if (PoseidonParams::is_full_round(r)) {
      for (auto& s : state) s = pow5_gadget(b, s);
    } else {
      state[0] = pow5_gadget(b, state[0]);
    }
    std::array<LC, t> mixed;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) mixed[i] += state[j] * params.mds[i][j];
    state = std::move(mixed);
  }
  return state[0];
}

// Decomposes `x` into `nbits` boolean variables and enforces
// sum 2^i * bit_i == x. Unsatisfiable unless 0 <= x < 2^nbits as an integer,
// so values that wrapped around the field fail here.
inline std::vector<Variable> range_check_gadget(R1csBuilder& b, const LC& x, std::uint32_t nbits) {
  math::BigInt<4> v = b.value(x).to_int();
  std::vector<Variable> bits;
  bits.reserve(nbits);
  LC sum;
  Fr pow2 = Fr::one();
  for (std::uint32_t i = 0; i < nbits; ++i) {
    Variable bit = b.witness(v.bit(i) ? Fr::one() : Fr::zero());
    b.enforce(bit, LC(bit) - LC(Variable::one()), LC());
    sum += LC(bit) * pow2;
    pow2 = pow2.dbl();
    bits.push_back(bit);
  }
  b.enforce(sum, Variable::one(), x);
  return bits;
}

}  // namespace zkc::circuit

#endif  // ZKC_CIRCUIT_GADGETS_HPP_
