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

#ifndef ZKC_PROVING_BACKEND_HPP_
#define ZKC_PROVING_BACKEND_HPP_

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "zkc/circuit/age_circuit.hpp"
#include "zkc/common/crypto.hpp"
#include "zkc/common/error.hpp"
#include "zkc/proving/groth16.hpp"
#include "zkc/proving/keys.hpp"

// setup / prove / verify over the age circuit.
//
// Simulated backend: the proof body is HMAC-SHA256 under a key held by both
// pk and vk, over the fingerprint and the statement. It has the accept/reject
// behaviour of a proof system and none of its secrecy: any vk holder can mint
// proofs. Use it for protocol tests only.
namespace zkc::proving {

namespace internal {

inline Digest simulated_mac(ByteView key, const Digest& fingerprint, const circuit::Statement& st) {
  ByteWriter w;
  w.raw(as_bytes("zkc-sim-v1"));
  w.raw(fingerprint);
  w.raw(st.serialize());
  return hmac_sha256(key, w.data());
}

}  // namespace internal

inline KeyPair setup(const circuit::ConstraintSystem& cs, BackendId backend, const std::optional<Seed>& seed = {}) {
  circuit::require_age_shape(cs);
  RandomSource rng = RandomSource::from_optional(seed);
  KeyPair kp;
  kp.pk.backend = kp.vk.backend = backend;
  kp.pk.fingerprint = kp.vk.fingerprint = cs.fingerprint();
  kp.pk.bit_width = kp.vk.bit_width = cs.bit_width;
  kp.pk.metadata = kp.vk.metadata = std::string(kSetupNotice);
  kp.pk.cs = std::make_shared<circuit::ConstraintSystem>(cs);
  switch (backend) {
    case BackendId::kSimulated: {
      Bytes key(32);
      rng.fill(key);
      kp.pk.material = kp.vk.material = key;
      break;
    }
    case BackendId::kSnark: {
      auto g = groth16::setup(cs, rng);
      kp.pk.material = groth16::encode_pk(g.pk);
      kp.vk.material = groth16::encode_vk(g.vk);
      kp.pk.snark = std::make_shared<groth16::ProvingKey>(std::move(g.pk));
      kp.vk.snark = std::make_shared<groth16::VerifyingKey>(std::move(g.vk));
      break;
    }
    default:
      throw Error(ErrorCode::kUnsupportedBackend);
  }
  return kp;
}

inline KeyPair setup(const circuit::ConstraintSystem& cs, std::string_view backend, const std::optional<Seed>& seed = {}) {
  return setup(cs, parse_backend(backend), seed);
}

// Runs check_witness first and throws UnsatisfiedWitness before any
// proving work. `rng` feeds the SNARK blinding factors (OS randomness when null).
inline Proof prove(const ProvingKey& pk, const circuit::Statement& st, const circuit::Witness& w,
                   RandomSource* rng = nullptr) {
  if (!pk.cs) throw Error(ErrorCode::kMalformedKey, "proving key has no circuit");
  st.validate();
  std::vector<bn254::Fr> z = circuit::assign_age_circuit(*pk.cs, st, w);
  if (!pk.cs->is_satisfied(z)) throw Error(ErrorCode::kUnsatisfiedWitness);

  Proof p;
  p.backend = pk.backend;
  p.statement_digest = st.digest();
  ByteWriter out;
  out.raw(pk.fingerprint);
  if (pk.backend == BackendId::kSimulated) {
    out.raw(internal::simulated_mac(pk.material, pk.fingerprint, st));
  } else {
    if (!pk.snark) throw Error(ErrorCode::kMalformedKey, "missing groth16 key");
    RandomSource os;
    groth16::Proof g = groth16::prove(*pk.snark, *pk.cs, z, rng ? *rng : os);
    out.raw(groth16::encode_proof(g));
  }
  p.bytes = std::move(out).take();
  return p;
}

// True iff `p` was produced under the matching pk for exactly `st`.
// Throws FingerprintMismatch for a proof made for another circuit and
// MalformedProof for bytes that do not decode.
inline bool verify(const VerificationKey& vk, const circuit::Statement& st, const Proof& p) {
  if (p.backend != vk.backend) throw Error(ErrorCode::kMalformedProof, "backend mismatch");
  if (p.bytes.size() != sizeof(Digest) + proof_body_size(vk.backend)) {
    throw Error(ErrorCode::kMalformedProof, "proof size");
  }
  ByteView prefix(p.bytes.data(), sizeof(Digest));
  if (!std::equal(prefix.begin(), prefix.end(), vk.fingerprint.begin())) {
    throw Error(ErrorCode::kFingerprintMismatch);
  }
  ByteView body(p.bytes.data() + sizeof(Digest), p.bytes.size() - sizeof(Digest));
  if (st.expiry >= circuit::kMaxExpiry) return false;
  if (!ct_equal(p.statement_digest, st.digest())) return false;
  if (vk.backend == BackendId::kSimulated) {
    return ct_equal(body, internal::simulated_mac(vk.material, vk.fingerprint, st));
  }
  if (!vk.snark) throw Error(ErrorCode::kMalformedKey, "missing groth16 key");
  groth16::Proof g = groth16::decode_proof(body);
  auto inputs = st.public_inputs();
  return groth16::verify(*vk.snark, inputs, g);
}

}  // namespace zkc::proving

#endif  // ZKC_PROVING_BACKEND_HPP_
