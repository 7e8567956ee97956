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

#ifndef ZKC_CIRCUIT_AGE_CIRCUIT_HPP_
#define ZKC_CIRCUIT_AGE_CIRCUIT_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zkc/circuit/gadgets.hpp"
#include "zkc/circuit/r1cs.hpp"
#include "zkc/common/bytes.hpp"
#include "zkc/common/crypto.hpp"
#include "zkc/common/error.hpp"
#include "zkc/hash/poseidon.hpp"

namespace zkc::circuit {

// Days in 18 years at the mean Gregorian year length, rounded down.
inline constexpr std::uint32_t kAdultThresholdDays = 6574;

inline constexpr std::uint32_t kDefaultBitWidth = 32;
inline constexpr std::uint32_t kMinBitWidth = 4;
inline constexpr std::uint32_t kMaxBitWidth = 64;

// Public-input slot order. Part of the versioned circuit format.
inline constexpr std::array<std::string_view, 6> kPublicLayout = {
    "commitment", "threshold_days", "current_day", "subject", "service_id", "expiry"};
inline constexpr std::size_t kNumPublicInputs = kPublicLayout.size();

struct SaltTag {};
// 128-bit secret bound into every attribute commitment.
using Salt = FixedBytes<16, SaltTag>;

inline Fr salt_to_field(const Salt& s) { return Fr::from_int(math::BigInt<4>::from_be_bytes(s.bytes)); }
inline Fr address_to_field(const Address& a) { return Fr::from_int(math::BigInt<4>::from_be_bytes(a.bytes)); }

// Field element naming a relying service: SHA-256 of the name, reduced mod r.
inline Fr service_id_from_name(std::string_view name) {
  Digest d = sha256(as_bytes(name));
  return Fr::from_be_bytes_reduce(d);
}
inline std::string field_hex(const Fr& x) { return to_hex(x.to_be_bytes()); }
inline bool parse_field_hex(std::string_view hex, Fr& out) {
  Bytes raw;
  return from_hex(hex, raw) && Fr::from_be_bytes_canonical(raw, out);
}

inline constexpr std::uint64_t kMaxExpiry = std::uint64_t{1} << 63;

// Public inputs of an age-predicate proof.
struct Statement {
  Fr commitment;
  std::uint32_t threshold_days = 0;
  std::uint32_t current_day = 0;
  Address subject;  // all-zero in unbound mode
  Fr service_id;
  std::uint64_t expiry = 0;  // unix seconds, < 2^63

  void validate() const {
    if (expiry >= kMaxExpiry) throw Error(ErrorCode::kValueOutOfRange, "expiry must be < 2^63");
  }

  std::array<Fr, kNumPublicInputs> public_inputs() const {
    return {commitment,
            Fr::from_u64(threshold_days),
            Fr::from_u64(current_day),
            address_to_field(subject),
            service_id,
            Fr::from_u64(expiry)};
  }

  // Six 32-byte big-endian field elements in layout order.
  Bytes serialize() const {
    ByteWriter w;
    for (const Fr& x : public_inputs()) w.raw(x.to_be_bytes());
    return std::move(w).take();
  }

  static Statement deserialize(ByteView data) {
    if (data.size() != 32 * kNumPublicInputs) throw Error(ErrorCode::kShapeMismatch, "statement size");
    std::array<Fr, kNumPublicInputs> f;
    for (std::size_t i = 0; i < kNumPublicInputs; ++i) {
      if (!Fr::from_be_bytes_canonical(data.subspan(32 * i, 32), f[i])) {
        throw Error(ErrorCode::kShapeMismatch, "non-canonical statement field");
      }
    }
    auto small = [&](std::size_t slot, std::size_t bits) {
      math::BigInt<4> v = f[slot].to_int();
      if (v.num_bits() > bits) throw Error(ErrorCode::kValueOutOfRange, std::string(kPublicLayout[slot]));
      return v;
    };
    Statement st;
    st.commitment = f[0];
    st.threshold_days = static_cast<std::uint32_t>(small(1, 32).limbs[0]);
    st.current_day = static_cast<std::uint32_t>(small(2, 32).limbs[0]);
    auto subject_bytes = small(3, 160).to_be_bytes();
    std::copy(subject_bytes.end() - 20, subject_bytes.end(), st.subject.bytes.begin());
    st.service_id = f[4];
    st.expiry = small(5, 63).limbs[0];
    return st;
  }

  Digest digest() const { return sha256(serialize()); }

  friend bool operator==(const Statement&, const Statement&) = default;
};

struct Witness {
  std::uint32_t value = 0;  // birthdate, days since 1970-01-01
  Salt salt;
};

struct AgeSynthesis {
  ConstraintSystem cs;
  std::vector<Fr> assignment;
  Fr hash_output;  // in-circuit Poseidon(value, salt)
};

// Builds the age circuit and, in the same pass, its assignment for (st, w).
inline AgeSynthesis synthesize_age_circuit(std::uint32_t bit_width, const Statement& st, const Witness& w) {
  if (bit_width < kMinBitWidth || bit_width > kMaxBitWidth) {
    throw Error(ErrorCode::kParameterOutOfRange, "bit_width must be in [4, 64]");
  }
  R1csBuilder b;
  auto pub = st.public_inputs();
  std::array<Variable, kNumPublicInputs> in;
  for (std::size_t i = 0; i < kNumPublicInputs; ++i) in[i] = b.input(std::string(kPublicLayout[i]), pub[i]);
  const Variable commitment = in[0], threshold = in[1], current_day = in[2];

  Variable value = b.witness(Fr::from_u64(w.value));
  Variable salt = b.witness(salt_to_field(w.salt));

  // (a) commitment opening
  LC hashed = poseidon2_gadget(b, value, salt);
  Fr hash_output = b.value(hashed);
  b.enforce(hashed, Variable::one(), commitment);

  // (b) value and current_day - value - threshold both in [0, 2^bit_width)
  range_check_gadget(b, value, bit_width);
  LC diff = LC(current_day) - LC(value) - LC(threshold);
  range_check_gadget(b, diff, bit_width);

  // (c) every public input appears in a constraint row of its own so the
  // proof binds it even when nothing else references the slot.
  for (const Variable& v : in) b.enforce(v, LC(), LC());

  auto [cs, z] = std::move(b).finish();
  cs.bit_width = bit_width;
  cs.hash_id = std::string(hash::kPoseidonHashId);
  return {std::move(cs), std::move(z), hash_output};
}

inline ConstraintSystem build_age_circuit(std::uint32_t bit_width = kDefaultBitWidth) {
  return synthesize_age_circuit(bit_width, Statement{}, Witness{}).cs;
}

// Throws ShapeMismatch unless `cs` has the age-circuit layout.
inline void require_age_shape(const ConstraintSystem& cs) {
  if (cs.hash_id != hash::kPoseidonHashId || cs.public_layout.size() != kNumPublicInputs ||
      cs.bit_width < kMinBitWidth || cs.bit_width > kMaxBitWidth) {
    throw Error(ErrorCode::kShapeMismatch, "not an age circuit");
  }
  for (std::size_t i = 0; i < kNumPublicInputs; ++i) {
    if (cs.public_layout[i] != kPublicLayout[i]) throw Error(ErrorCode::kShapeMismatch, "public layout");
  }
}

// Full assignment for (st, w) under `cs`; throws ShapeMismatch if the
// synthesized shape disagrees with `cs`.
inline std::vector<Fr> assign_age_circuit(const ConstraintSystem& cs, const Statement& st, const Witness& w) {
  require_age_shape(cs);
  AgeSynthesis syn = synthesize_age_circuit(cs.bit_width, st, w);
  if (syn.cs.num_variables != cs.num_variables || syn.cs.num_constraints() != cs.num_constraints()) {
    throw Error(ErrorCode::kShapeMismatch, "assignment does not fit constraint system");
  }
  return std::move(syn.assignment);
}

// True iff every constraint of `cs` holds under the assignment for (st, w).
inline bool check_witness(const ConstraintSystem& cs, const Statement& st, const Witness& w) {
  return cs.is_satisfied(assign_age_circuit(cs, st, w));
}

}  // namespace zkc::circuit

#endif  // ZKC_CIRCUIT_AGE_CIRCUIT_HPP_
