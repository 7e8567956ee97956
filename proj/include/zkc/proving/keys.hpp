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

#ifndef ZKC_PROVING_KEYS_HPP_
#define ZKC_PROVING_KEYS_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>
#include <string_view>

#include "zkc/circuit/age_circuit.hpp"
#include "zkc/common/bytes.hpp"
#include "zkc/common/crypto.hpp"
#include "zkc/common/error.hpp"
#include "zkc/proving/groth16.hpp"

namespace zkc::proving {

enum class BackendId : std::uint8_t {
  kSimulated = 1,
  kSnark = 2,
};

inline std::string_view backend_name(BackendId id) {
  switch (id) {
    case BackendId::kSimulated: return "simulated";
    case BackendId::kSnark: return "snark";
  }
  return "unknown";
}

inline BackendId parse_backend(std::string_view name) {
  if (name == "simulated" || name == "sim") return BackendId::kSimulated;
  if (name == "snark" || name == "groth16") return BackendId::kSnark;
  throw Error(ErrorCode::kUnsupportedBackend, std::string(name));
}

inline BackendId backend_from_byte(std::uint8_t b, ErrorCode err) {
  if (b == static_cast<std::uint8_t>(BackendId::kSimulated)) return BackendId::kSimulated;
  if (b == static_cast<std::uint8_t>(BackendId::kSnark)) return BackendId::kSnark;
  throw Error(err, "unknown backend id " + std::to_string(b));
}

inline constexpr std::string_view kSetupNotice = "single-party local setup, insecure for production";

// Size of the proof body excluding the fingerprint prefix.
inline std::size_t proof_body_size(BackendId id) {
  return id == BackendId::kSnark ? groth16::kProofBytes : sizeof(Digest);
}

struct ProvingKey {
  BackendId backend = BackendId::kSimulated;
  Digest fingerprint{};
  std::uint32_t bit_width = 0;
  std::string metadata;
  Bytes material;
  // Derived, immutable views shared across copies.
  std::shared_ptr<const circuit::ConstraintSystem> cs;
  std::shared_ptr<const groth16::ProvingKey> snark;
};

struct VerificationKey {
  BackendId backend = BackendId::kSimulated;
  Digest fingerprint{};
  std::uint32_t bit_width = 0;
  std::string metadata;
  Bytes material;
  std::shared_ptr<const groth16::VerifyingKey> snark;
};

struct KeyPair {
  ProvingKey pk;
  VerificationKey vk;
};

// Proof bytes are the circuit fingerprint followed by the backend body, so a
// verifier can tell a foreign-circuit proof from a forged one.
struct Proof {
  BackendId backend = BackendId::kSimulated;
  Bytes bytes;
  Digest statement_digest{};

  // {backend_id:1, u32 length, bytes, statement digest:32}
  Bytes encode() const {
    ByteWriter w;
    w.u8(static_cast<std::uint8_t>(backend));
    w.blob(bytes);
    w.raw(statement_digest);
    return std::move(w).take();
  }

  static Proof decode(ByteView data) {
    ByteReader r(data);
    Proof p;
    p.backend = backend_from_byte(r.u8(), ErrorCode::kMalformedProof);
    p.bytes = r.blob(4096);
    p.statement_digest = r.fixed<32>();
    if (!r.ok_and_done()) throw Error(ErrorCode::kMalformedProof, "proof encoding");
    return p;
  }

  friend bool operator==(const Proof&, const Proof&) = default;
};

// ---- key files ------------------------------------------------------------

inline constexpr std::string_view kKeyMagic = "ZKCK";
inline constexpr std::uint16_t kKeyVersion = 1;

namespace internal {

enum class KeyKind : std::uint8_t { kProving = 1, kVerification = 2 };

template <class K>
Bytes encode_key(const K& k, KeyKind kind) {
  ByteWriter body;
  body.u8(static_cast<std::uint8_t>(kind));
  body.u32(k.bit_width);
  body.str(k.metadata);
  body.blob(k.material);
  ByteWriter w;
  w.raw(as_bytes(kKeyMagic));
  w.u16(kKeyVersion);
  w.u8(static_cast<std::uint8_t>(k.backend));
  w.raw(k.fingerprint);
  w.blob(body.data());
  return std::move(w).take();
}

template <class K>
K decode_key_header(ByteView data, KeyKind kind) {
  constexpr ErrorCode kErr = ErrorCode::kMalformedKey;
  ByteReader r(data);
  ByteView magic = r.raw(kKeyMagic.size());
  if (magic.size() != kKeyMagic.size() || !std::equal(magic.begin(), magic.end(), kKeyMagic.begin())) {
    throw Error(kErr, "bad magic");
  }
  if (r.u16() != kKeyVersion) throw Error(kErr, "unsupported key version");
  K k;
  k.backend = backend_from_byte(r.u8(), kErr);
  k.fingerprint = r.fixed<32>();
  Bytes body = r.blob();
  if (!r.ok_and_done()) throw Error(kErr, "key file truncated");
  ByteReader br(body);
  if (br.u8() != static_cast<std::uint8_t>(kind)) throw Error(kErr, "wrong key kind");
  k.bit_width = br.u32();
  k.metadata = br.str();
  k.material = br.blob();
  if (!br.ok_and_done()) throw Error(kErr, "key body");
  return k;
}

}  // namespace internal

inline Bytes encode_proving_key(const ProvingKey& pk) {
  return internal::encode_key(pk, internal::KeyKind::kProving);
}
inline Bytes encode_verification_key(const VerificationKey& vk) {
  return internal::encode_key(vk, internal::KeyKind::kVerification);
}

// Rebuilds the circuit from the recorded bit width and checks it against the
// stored fingerprint.
inline ProvingKey decode_proving_key(ByteView data) {
  auto pk = internal::decode_key_header<ProvingKey>(data, internal::KeyKind::kProving);
  if (pk.bit_width < circuit::kMinBitWidth || pk.bit_width > circuit::kMaxBitWidth) {
    throw Error(ErrorCode::kMalformedKey, "bit width");
  }
  auto cs = std::make_shared<circuit::ConstraintSystem>(circuit::build_age_circuit(pk.bit_width));
  if (cs->fingerprint() != pk.fingerprint) throw Error(ErrorCode::kFingerprintMismatch, "proving key circuit");
  pk.cs = std::move(cs);
  if (pk.backend == BackendId::kSnark) {
    auto g = std::make_shared<groth16::ProvingKey>(groth16::decode_pk(pk.material));
    if (g->num_variables != pk.cs->num_variables || g->num_public != pk.cs->num_public()) {
      throw Error(ErrorCode::kMalformedKey, "proving key shape");
    }
    pk.snark = std::move(g);
  } else if (pk.material.size() != 32) {
    throw Error(ErrorCode::kMalformedKey, "simulated key size");
  }
  return pk;
}

inline VerificationKey decode_verification_key(ByteView data) {
  auto vk = internal::decode_key_header<VerificationKey>(data, internal::KeyKind::kVerification);
  if (vk.backend == BackendId::kSnark) {
    auto g = std::make_shared<groth16::VerifyingKey>(groth16::decode_vk(vk.material));
    if (g->ic.size() != circuit::kNumPublicInputs + 1) throw Error(ErrorCode::kMalformedKey, "verifying key shape");
    vk.snark = std::move(g);
  } else if (vk.material.size() != 32) {
    throw Error(ErrorCode::kMalformedKey, "simulated key size");
  }
  return vk;
}

inline Bytes read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

inline void write_file_bytes(const std::filesystem::path& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
}

}  // namespace zkc::proving

#endif  // ZKC_PROVING_KEYS_HPP_
