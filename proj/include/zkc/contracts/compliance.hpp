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

#ifndef ZKC_CONTRACTS_COMPLIANCE_HPP_
#define ZKC_CONTRACTS_COMPLIANCE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "zkc/circuit/age_circuit.hpp"
#include "zkc/common/bytes.hpp"
#include "zkc/common/crypto.hpp"
#include "zkc/common/error.hpp"
#include "zkc/ledger/chain.hpp"
#include "zkc/proving/backend.hpp"

// Verifier plus access registry, one contract. Storage layout:
//   admin                                  deployer address
//   verifier/pred/<id>                     PredicateInfo
//   registry/rec/<subject hex>/<svc hex>   AccessRecord
namespace zkc::contracts {

using bn254::Fr;
using circuit::Statement;

inline constexpr std::string_view kComplianceId = "compliance";
inline constexpr std::string_view kDefaultPredicateId = "age18";
inline constexpr std::int64_t kFreshnessDays = 1;
inline constexpr std::uint64_t kSecondsPerDay = 86400;

enum class BindingMode : std::uint8_t { kUnbound = 0, kBound = 1 };

inline std::string_view binding_mode_name(BindingMode m) { return m == BindingMode::kBound ? "bound" : "unbound"; }
inline BindingMode parse_binding_mode(std::string_view s) {
  if (s == "bound") return BindingMode::kBound;
  if (s == "unbound") return BindingMode::kUnbound;
  throw Error(ErrorCode::kInvalidArgument, "binding mode: " + std::string(s));
}

struct PredicateInfo {
  std::string id;
  std::uint32_t threshold_days = 0;
  BindingMode mode = BindingMode::kBound;
  Bytes vk;  // verification key file bytes

  Bytes encode() const {
    ByteWriter w;
    w.str(id);
    w.u32(threshold_days);
    w.u8(static_cast<std::uint8_t>(mode));
    w.blob(vk);
    return std::move(w).take();
  }
  static std::optional<PredicateInfo> decode(ByteView data) {
    ByteReader r(data);
    PredicateInfo p;
    p.id = r.str();
    p.threshold_days = r.u32();
    std::uint8_t m = r.u8();
    p.vk = r.blob();
    if (!r.ok_and_done() || m > 1) return std::nullopt;
    p.mode = static_cast<BindingMode>(m);
    return p;
  }
};

struct AccessRecord {
  Address subject;
  Fr service_id;
  std::string predicate_id;
  std::uint64_t granted_at = 0;
  std::uint64_t expires_at = 0;

  Bytes encode() const {
    ByteWriter w;
    w.raw(subject.bytes);
    w.raw(service_id.to_be_bytes());
    w.str(predicate_id);
    w.u64(granted_at);
    w.u64(expires_at);
    return std::move(w).take();
  }
  static std::optional<AccessRecord> decode(ByteReader& r) {
    AccessRecord a;
    a.subject.bytes = r.fixed<20>();
    auto svc = r.fixed<32>();
    a.predicate_id = r.str();
    a.granted_at = r.u64();
    a.expires_at = r.u64();
    if (r.failed() || !Fr::from_be_bytes_canonical(svc, a.service_id)) return std::nullopt;
    return a;
  }
  friend bool operator==(const AccessRecord&, const AccessRecord&) = default;
};

enum class AccessState : std::uint8_t { kNone = 0, kActive = 1, kExpired = 2 };

inline std::string_view access_state_name(AccessState s) {
  switch (s) {
    case AccessState::kNone: return "none";
    case AccessState::kActive: return "active";
    case AccessState::kExpired: return "expired";
  }
  return "none";
}

struct AccessStatus {
  AccessState state = AccessState::kNone;
  std::optional<AccessRecord> record;

  Bytes encode() const {
    ByteWriter w;
    w.u8(static_cast<std::uint8_t>(state));
    if (record) w.raw(record->encode());
    return std::move(w).take();
  }
  static AccessStatus decode(ByteView data) {
    ByteReader r(data);
    AccessStatus s;
    std::uint8_t st = r.u8();
    if (st > 2) throw Error(ErrorCode::kInvalidArgument, "access status");
    s.state = static_cast<AccessState>(st);
    if (s.state != AccessState::kNone) {
      s.record = AccessRecord::decode(r);
      if (!s.record) throw Error(ErrorCode::kInvalidArgument, "access record");
    }
    if (!r.ok_and_done()) throw Error(ErrorCode::kInvalidArgument, "access status");
    return s;
  }
};

// ---- call arguments -------------------------------------------------------

inline Bytes register_predicate_args(std::string_view id, std::uint32_t threshold, BindingMode mode, ByteView vk_file) {
  ByteWriter w;
  w.str(id);
  w.u32(threshold);
  w.u8(static_cast<std::uint8_t>(mode));
  w.blob(vk_file);
  return std::move(w).take();
}

inline Bytes grant_args(std::string_view predicate_id, const Statement& st, const proving::Proof& p) {
  ByteWriter w;
  w.str(predicate_id);
  w.blob(st.serialize());
  w.blob(p.encode());
  return std::move(w).take();
}

inline Bytes revoke_args(const Fr& service_id) {
  auto b = service_id.to_be_bytes();
  return Bytes(b.begin(), b.end());
}

inline Bytes check_access_args(const Address& subject, const Fr& service_id) {
  ByteWriter w;
  w.raw(subject.bytes);
  w.raw(service_id.to_be_bytes());
  return std::move(w).take();
}

inline std::string record_key(const Address& subject, const Fr& service_id) {
  return "registry/rec/" + subject.hex() + "/" + circuit::field_hex(service_id);
}

inline std::string predicate_key(std::string_view id) { return "verifier/pred/" + std::string(id); }

inline Bytes granted_payload(const Address& subject, const Fr& service, std::uint64_t expires_at) {
  ByteWriter w;
  w.raw(subject.bytes);
  w.raw(service.to_be_bytes());
  w.u64(expires_at);
  return std::move(w).take();
}

inline Bytes revoked_payload(const Address& subject, const Fr& service) {
  ByteWriter w;
  w.raw(subject.bytes);
  w.raw(service.to_be_bytes());
  return std::move(w).take();
}

class ComplianceContract final : public ledger::Contract {
 public:
  std::string_view id() const override { return kComplianceId; }

  void init(ledger::CallContext& ctx) const override {
    ctx.put("admin", Bytes(ctx.sender().bytes.begin(), ctx.sender().bytes.end()));
  }

  void execute(ledger::CallContext& ctx) const override {
    if (ctx.call() == "register_predicate") return register_predicate(ctx);
    if (ctx.call() == "grant") return grant(ctx);
    if (ctx.call() == "revoke") return revoke(ctx);
    ctx.revert("UnknownCall");
  }

  Bytes query(const ledger::StateView& view, std::string_view call, ByteView args) const override {
    if (call == "check_access") {
      if (args.size() != 52) throw Error(ErrorCode::kInvalidArgument, "check_access args");
      Address subject;
      std::copy(args.begin(), args.begin() + 20, subject.bytes.begin());
      Fr service;
      if (!Fr::from_be_bytes_canonical(args.subspan(20), service)) {
        throw Error(ErrorCode::kInvalidArgument, "service id");
      }
      return check_access(view, subject, service).encode();
    }
    if (call == "predicate") {
      auto raw = view.get(predicate_key(std::string_view(reinterpret_cast<const char*>(args.data()), args.size())));
      if (!raw) return {};
      return *raw;
    }
    if (call == "admin") return view.get("admin").value_or(Bytes{});
    throw Error(ErrorCode::kInvalidArgument, "unknown query " + std::string(call));
  }

  static AccessStatus check_access(const ledger::StateView& view, const Address& subject, const Fr& service) {
    AccessStatus s;
    auto raw = view.get(record_key(subject, service));
    if (!raw) return s;
    ByteReader r(*raw);
    s.record = AccessRecord::decode(r);
    if (!s.record) return {};
    s.state = view.clock() < s.record->expires_at ? AccessState::kActive : AccessState::kExpired;
    return s;
  }

 private:
  void register_predicate(ledger::CallContext& ctx) const {
    auto admin = ctx.get("admin");
    if (!admin || !std::equal(admin->begin(), admin->end(), ctx.sender().bytes.begin())) ctx.revert("NotAdmin");
    ByteReader r(ctx.args());
    PredicateInfo p;
    p.id = r.str(256);
    p.threshold_days = r.u32();
    std::uint8_t mode = r.u8();
    p.vk = r.blob();
    if (!r.ok_and_done() || mode > 1 || p.id.empty()) ctx.revert("MalformedArgs");
    p.mode = static_cast<BindingMode>(mode);
    if (ctx.get(predicate_key(p.id))) ctx.revert("DuplicatePredicate");
    try {
      cached_vk(p.vk);
    } catch (const Error&) {
      ctx.revert("MalformedKey");
    }
    ctx.charge("storage_write");
    ctx.put(predicate_key(p.id), p.encode());
    ctx.charge("event");
    ByteWriter ev;
    ev.str(p.id);
    ev.u32(p.threshold_days);
    ev.u8(mode);
    ctx.emit("PredicateRegistered", std::move(ev).take());
  }

  void grant(ledger::CallContext& ctx) const {
    ByteReader r(ctx.args());
    std::string pred_id = r.str(256);
    Bytes st_bytes = r.blob(1024);
    Bytes proof_bytes = r.blob(8192);
    if (!r.ok_and_done()) ctx.revert("MalformedArgs");

    auto raw = ctx.get(predicate_key(pred_id));
    if (!raw) ctx.revert("UnknownPredicate");
    auto pred = PredicateInfo::decode(*raw);
    if (!pred) ctx.revert("UnknownPredicate");

    Statement st;
    proving::Proof proof;
    try {
      st = Statement::deserialize(st_bytes);
      proof = proving::Proof::decode(proof_bytes);
    } catch (const Error&) {
      ctx.revert("MalformedArgs");
    }

    if (pred->mode == BindingMode::kBound && st.subject != ctx.sender()) ctx.revert("SenderMismatch");
    if (st.expiry <= ctx.clock()) ctx.revert("ExpiryInPast");
    const std::int64_t chain_day = static_cast<std::int64_t>(ctx.clock() / kSecondsPerDay);
    const std::int64_t skew = static_cast<std::int64_t>(st.current_day) - chain_day;
    if (skew > kFreshnessDays || skew < -kFreshnessDays) ctx.revert("StaleStatement");
    if (st.threshold_days != pred->threshold_days) ctx.revert("ThresholdMismatch");

    ctx.charge("verify_proof");
    bool valid = false;
    try {
      valid = proving::verify(*cached_vk(pred->vk), st, proof);
    } catch (const Error&) {
      valid = false;
    }
    if (!valid) ctx.revert("InvalidProof");

    // Unbound mode has no subject in the statement; the session goes to
    // whoever submits the proof.
    const Address subject = pred->mode == BindingMode::kBound ? st.subject : ctx.sender();
    AccessRecord rec{subject, st.service_id, pred_id, ctx.clock(), st.expiry};
    ctx.charge("storage_write");
    ctx.put(record_key(subject, st.service_id), rec.encode());
    ctx.charge("event");
    ctx.emit("Granted", granted_payload(subject, st.service_id, st.expiry));
  }

  void revoke(ledger::CallContext& ctx) const {
    Fr service;
    if (ctx.args().size() != 32 || !Fr::from_be_bytes_canonical(ctx.args(), service)) ctx.revert("MalformedArgs");
    const std::string key = record_key(ctx.sender(), service);
    if (!ctx.get(key)) ctx.revert("NoActiveRecord");
    ctx.charge("storage_delete");
    ctx.erase(key);
    ctx.charge("event");
    ctx.emit("Revoked", revoked_payload(ctx.sender(), service));
  }

  // Decoded verification keys, keyed by a hash of the stored bytes.
  std::shared_ptr<const proving::VerificationKey> cached_vk(const Bytes& vk_file) const {
    Digest d = sha256(vk_file);
    std::lock_guard lock(vk_mu_);
    auto it = vk_cache_.find(d);
    if (it != vk_cache_.end()) return it->second;
    auto vk = std::make_shared<const proving::VerificationKey>(proving::decode_verification_key(vk_file));
    vk_cache_.emplace(d, vk);
    return vk;
  }

  mutable std::mutex vk_mu_;
  mutable std::map<Digest, std::shared_ptr<const proving::VerificationKey>> vk_cache_;
};

inline std::shared_ptr<const ComplianceContract> compliance_contract() {
  static const auto kInstance = std::make_shared<const ComplianceContract>();
  return kInstance;
}

// A chain with the compliance contract deployed by `admin`.
inline ledger::Chain make_compliance_chain(const Address& admin, ledger::Genesis genesis = {}) {
  ledger::Chain chain(std::move(genesis));
  chain.deploy(compliance_contract(), admin);
  return chain;
}

inline ledger::Chain load_compliance_chain(const nlohmann::json& snapshot) {
  return ledger::Chain::from_snapshot(snapshot, {compliance_contract()});
}

inline AccessStatus query_access(const ledger::Chain& chain, const Address& subject, const Fr& service) {
  return AccessStatus::decode(chain.query(kComplianceId, "check_access", check_access_args(subject, service)));
}

inline std::optional<PredicateInfo> query_predicate(const ledger::Chain& chain, std::string_view id) {
  Bytes raw = chain.query(kComplianceId, "predicate", as_bytes(id));
  if (raw.empty()) return std::nullopt;
  return PredicateInfo::decode(raw);
}

}  // namespace zkc::contracts

#endif  // ZKC_CONTRACTS_COMPLIANCE_HPP_
