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

#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "json.hpp"
#include "test_support.hpp"
#include "zkc/proving/backend.hpp"

namespace {

using namespace zkc;
using namespace zkc::proving;
namespace zt = zkc::testing;
using circuit::Salt;
using circuit::build_age_circuit;
using zt::make_case;
using zt::salt_from_rng;

Seed seed_of(std::uint8_t b) {
  Seed s{};
  s[0] = b;
  return s;
}

// Keys are costly for the SNARK backend, so build them once.
const KeyPair& snark_keys() {
  static const KeyPair kp = setup(build_age_circuit(), BackendId::kSnark, seed_of(1));
  return kp;
}
const KeyPair& sim_keys() {
  static const KeyPair kp = setup(build_age_circuit(), BackendId::kSimulated, seed_of(2));
  return kp;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(Backend, Names) {
  EXPECT_EQ(parse_backend("simulated"), BackendId::kSimulated);
  EXPECT_EQ(parse_backend("snark"), BackendId::kSnark);
  EXPECT_EQ(parse_backend("groth16"), BackendId::kSnark);
  EXPECT_EQ(code_of([] { parse_backend("plonk"); }), ErrorCode::kUnsupportedBackend);
  EXPECT_EQ(code_of([] { setup(build_age_circuit(), "stark"); }), ErrorCode::kUnsupportedBackend);
}

TEST(Backend, SetupNoticeAndFingerprint) {
  auto cs = build_age_circuit();
  EXPECT_EQ(sim_keys().vk.metadata, kSetupNotice);
  EXPECT_EQ(snark_keys().vk.metadata, kSetupNotice);
  EXPECT_EQ(snark_keys().vk.fingerprint, cs.fingerprint());
  EXPECT_EQ(sim_keys().pk.fingerprint, sim_keys().vk.fingerprint);
}

TEST(Backend, SeededSetupIsDeterministic) {
  auto cs = build_age_circuit();
  auto a = setup(cs, BackendId::kSimulated, seed_of(7));
  auto b = setup(cs, BackendId::kSimulated, seed_of(7));
  auto c = setup(cs, BackendId::kSimulated, seed_of(8));
  EXPECT_EQ(a.vk.material, b.vk.material);
  EXPECT_NE(a.vk.material, c.vk.material);
  auto u1 = setup(cs, BackendId::kSimulated);
  auto u2 = setup(cs, BackendId::kSimulated);
  EXPECT_NE(u1.vk.material, u2.vk.material);
}

TEST(Backend, SimulatedRoundTrip) {
  Salt salt;
  salt.bytes[3] = 9;
  auto c = make_case(zt::kBorn2000, salt);
  Proof p = prove(sim_keys().pk, c.st, c.w);
  EXPECT_EQ(p.bytes.size(), 64u);
  EXPECT_TRUE(verify(sim_keys().vk, c.st, p));
  EXPECT_EQ(Proof::decode(p.encode()), p);
}

TEST(Backend, SnarkRoundTrip) {
  Salt salt;
  salt.bytes[3] = 9;
  auto c = make_case(zt::kBorn2000, salt);
  Proof p = prove(snark_keys().pk, c.st, c.w);
  EXPECT_EQ(p.bytes.size(), 32u + groth16::kProofBytes);
  EXPECT_TRUE(verify(snark_keys().vk, c.st, p));
  // fresh blinding each time
  Proof q = prove(snark_keys().pk, c.st, c.w);
  EXPECT_NE(p.bytes, q.bytes);
  EXPECT_TRUE(verify(snark_keys().vk, c.st, q));
}

TEST(Backend, UnsatisfiedWitnessThrowsBeforeProving) {
  Salt salt;
  auto minor = make_case(14761, salt);
  for (const KeyPair* kp : {&sim_keys(), &snark_keys()}) {
    EXPECT_EQ(code_of([&] { prove(kp->pk, minor.st, minor.w); }), ErrorCode::kUnsatisfiedWitness);
  }
  auto c = make_case(zt::kBorn2000, salt);
  c.st.expiry = std::uint64_t{1} << 63;
  EXPECT_EQ(code_of([&] { prove(sim_keys().pk, c.st, c.w); }), ErrorCode::kValueOutOfRange);
}

TEST(Backend, ForeignCircuitProofIsFingerprintMismatch) {
  auto kp16 = setup(build_age_circuit(16), BackendId::kSimulated, seed_of(3));
  Salt salt;
  auto c = make_case(zt::kBorn2000, salt);
  Proof p = prove(kp16.pk, c.st, c.w);
  EXPECT_EQ(code_of([&] { verify(sim_keys().vk, c.st, p); }), ErrorCode::kFingerprintMismatch);
}

TEST(Backend, WrongBackendOrSizeIsMalformed) {
  Salt salt;
  auto c = make_case(zt::kBorn2000, salt);
  Proof p = prove(sim_keys().pk, c.st, c.w);
  EXPECT_EQ(code_of([&] { verify(snark_keys().vk, c.st, p); }), ErrorCode::kMalformedProof);
  p.bytes.pop_back();
  EXPECT_EQ(code_of([&] { verify(sim_keys().vk, c.st, p); }), ErrorCode::kMalformedProof);
  EXPECT_EQ(code_of([] { Proof::decode(Bytes{1, 2, 3}); }), ErrorCode::kMalformedProof);
}

// Changing any public input slot must break verification.
void mutate_slot(circuit::Statement& st, int slot, std::mt19937_64& rng) {
  switch (slot) {
    case 0: st.commitment += bn254::Fr::from_u64(1 + rng() % 1000); break;
    case 1: st.threshold_days ^= 1u << (rng() % 32); break;
    case 2: st.current_day ^= 1u << (rng() % 32); break;
    case 3: st.subject.bytes[rng() % 20] ^= static_cast<std::uint8_t>(1u << (rng() % 8)); break;
    case 4: st.service_id += bn254::Fr::from_u64(1 + rng() % 1000); break;
    default: st.expiry ^= std::uint64_t{1} << (rng() % 63);
  }
}

bool accepted(const VerificationKey& vk, const circuit::Statement& st, const Proof& p) {
  try {
    return verify(vk, st, p);
  } catch (const Error&) {
    return false;
  }
}

TEST(Backend, SlotMutationRejected) {
  std::mt19937_64 rng(31);
  Salt salt = salt_from_rng(rng);
  auto c = make_case(zt::kBorn2000, salt);
  Proof ps = prove(sim_keys().pk, c.st, c.w);
  Proof pg = prove(snark_keys().pk, c.st, c.w);
  for (int slot = 0; slot < 6; ++slot) {
    for (int i = 0; i < 20; ++i) {
      auto st = c.st;
      mutate_slot(st, slot, rng);
      ASSERT_FALSE(accepted(sim_keys().vk, st, ps)) << slot;
    }
    // the SNARK check ignores the digest shortcut
    auto st = c.st;
    mutate_slot(st, slot, rng);
    Proof forged = pg;
    forged.statement_digest = st.digest();
    EXPECT_FALSE(accepted(snark_keys().vk, st, forged)) << slot;
  }
}

TEST(Backend, BitFlipsRejected) {
  std::mt19937_64 rng(41);
  auto c = make_case(zt::kBorn2000, salt_from_rng(rng));
  Proof ps = prove(sim_keys().pk, c.st, c.w);
  for (std::size_t bit = 0; bit < ps.bytes.size() * 8; ++bit) {
    Proof m = ps;
    m.bytes[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    ASSERT_FALSE(accepted(sim_keys().vk, c.st, m)) << bit;
  }
  Proof pg = prove(snark_keys().pk, c.st, c.w);
  for (int i = 0; i < 40; ++i) {
    Proof m = pg;
    std::size_t bit = 256 + rng() % (groth16::kProofBytes * 8);
    m.bytes[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    ASSERT_FALSE(accepted(snark_keys().vk, c.st, m)) << bit;
  }
}

TEST(Backend, NeighbourSetupDoesNotVerify) {
  auto other = setup(build_age_circuit(), BackendId::kSimulated, seed_of(99));
  Salt salt;
  auto c = make_case(zt::kBorn2000, salt);
  Proof p = prove(other.pk, c.st, c.w);
  EXPECT_FALSE(verify(sim_keys().vk, c.st, p));
}

TEST(Backend, EquivalentAcceptanceAcrossBackends) {
  std::mt19937_64 rng(51);
  auto cs = build_age_circuit();
  for (int i = 0; i < 200; ++i) {
    std::uint32_t day = 19000 + rng() % 20000;
    std::uint32_t value = static_cast<std::uint32_t>(rng() % day);
    auto c = make_case(value, salt_from_rng(rng), day);
    bool sat = circuit::check_witness(cs, c.st, c.w);
    ASSERT_EQ(sat, day - value >= circuit::kAdultThresholdDays);
    if (!sat) {
      ASSERT_EQ(code_of([&] { prove(sim_keys().pk, c.st, c.w); }), ErrorCode::kUnsatisfiedWitness);
      continue;
    }
    ASSERT_TRUE(verify(sim_keys().vk, c.st, prove(sim_keys().pk, c.st, c.w)));
    if (i % 10 == 0) {
      ASSERT_TRUE(verify(snark_keys().vk, c.st, prove(snark_keys().pk, c.st, c.w)));
    }
  }
}

TEST(KeyFiles, RoundTripBothBackends) {
  Salt salt;
  auto c = make_case(zt::kBorn2000, salt);
  for (const KeyPair* kp : {&sim_keys(), &snark_keys()}) {
    ProvingKey pk = decode_proving_key(encode_proving_key(kp->pk));
    VerificationKey vk = decode_verification_key(encode_verification_key(kp->vk));
    EXPECT_EQ(pk.material, kp->pk.material);
    EXPECT_EQ(vk.fingerprint, kp->vk.fingerprint);
    EXPECT_EQ(vk.metadata, kSetupNotice);
    EXPECT_TRUE(verify(vk, c.st, prove(pk, c.st, c.w)));
    EXPECT_TRUE(verify(kp->vk, c.st, prove(pk, c.st, c.w)));
  }
}

TEST(KeyFiles, FileIo) {
  zt::TempDir dir;
  write_file_bytes(dir / "age.vk", encode_verification_key(sim_keys().vk));
  auto vk = decode_verification_key(read_file_bytes(dir / "age.vk"));
  EXPECT_EQ(vk.material, sim_keys().vk.material);
  EXPECT_THROW(read_file_bytes(dir / "missing.vk"), Error);
}

TEST(KeyFiles, MalformedRejected) {
  Bytes vk = encode_verification_key(snark_keys().vk);
  Bytes bad = vk;
  bad[0] = 'Q';
  EXPECT_EQ(code_of([&] { decode_verification_key(bad); }), ErrorCode::kMalformedKey);
  bad = vk;
  bad.resize(bad.size() - 5);
  EXPECT_EQ(code_of([&] { decode_verification_key(bad); }), ErrorCode::kMalformedKey);
  bad = vk;
  bad[bad.size() - 40] ^= 0x55;  // corrupt a curve point
  EXPECT_EQ(code_of([&] { decode_verification_key(bad); }), ErrorCode::kMalformedKey);
  // a pk claiming a different circuit than its fingerprint
  Bytes pk = encode_proving_key(sim_keys().pk);
  pk[8] ^= 1;
  EXPECT_EQ(code_of([&] { decode_proving_key(pk); }), ErrorCode::kFingerprintMismatch);
  EXPECT_EQ(code_of([&] { decode_proving_key(vk); }), ErrorCode::kMalformedKey);
}

// Proof produced by the Groth16 implementation and independently checked
// with py_ecc's BN254 pairing.
TEST(Groth16, ExternalVectorVerifies) {
  std::ifstream in(std::string(ZKC_TEST_DATA_DIR) + "/groth16_vector.json");
  ASSERT_TRUE(in.good());
  auto j = nlohmann::json::parse(in);
  Bytes vk_raw, proof_raw, st_raw;
  ASSERT_TRUE(from_hex(j["vk"].get<std::string>(), vk_raw));
  ASSERT_TRUE(from_hex(j["proof"].get<std::string>(), proof_raw));
  ASSERT_TRUE(from_hex(j["statement"].get<std::string>(), st_raw));
  auto vk = groth16::decode_vk(vk_raw);
  auto proof = groth16::decode_proof(proof_raw);
  auto st = circuit::Statement::deserialize(st_raw);
  auto inputs = st.public_inputs();
  EXPECT_TRUE(groth16::verify(vk, inputs, proof));
  auto tampered = inputs;
  tampered[2] += bn254::Fr::one();
  EXPECT_FALSE(groth16::verify(vk, tampered, proof));

  // seeded setup and proving reproduce the vector byte for byte
  auto cs = build_age_circuit();
  RandomSource rng(Seed{});
  auto kp = groth16::setup(cs, rng);
  circuit::Witness w;
  w.value = 10957;
  w.salt.bytes[15] = 7;
  auto z = circuit::assign_age_circuit(cs, st, w);
  EXPECT_EQ(to_hex(groth16::encode_vk(kp.vk)), j["vk"].get<std::string>());
  EXPECT_EQ(to_hex(groth16::encode_proof(groth16::prove(kp.pk, cs, z, rng))), j["proof"].get<std::string>());
}

TEST(Groth16, PkEncodingRoundTrip) {
  const auto& pk = *snark_keys().pk.snark;
  Bytes raw = groth16::encode_pk(pk);
  auto back = groth16::decode_pk(raw);
  EXPECT_EQ(groth16::encode_pk(back), raw);
  raw.resize(raw.size() - 1);
  EXPECT_THROW(groth16::decode_pk(raw), Error);
}

}  // namespace
