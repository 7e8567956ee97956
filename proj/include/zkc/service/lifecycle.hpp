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

#ifndef ZKC_SERVICE_LIFECYCLE_HPP_
#define ZKC_SERVICE_LIFECYCLE_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zkc/circuit/age_circuit.hpp"
#include "zkc/contracts/compliance.hpp"
#include "zkc/economics/cost.hpp"
#include "zkc/proving/backend.hpp"
#include "zkc/service/endpoint.hpp"
#include "zkc/service/wire.hpp"
#include "zkc/vault/vault.hpp"

namespace zkc::service {

using contracts::AccessState;
using contracts::BindingMode;

// Account that deploys the contract and registers predicates.
inline Address default_operator() { return address_from_u64(0xad); }

struct PredicateConfig {
  std::string id = std::string(contracts::kDefaultPredicateId);
  std::uint32_t threshold_days = circuit::kAdultThresholdDays;
  BindingMode mode = BindingMode::kBound;
};

struct ServiceConfig {
  std::filesystem::path vault_path;
  // "local" (in-process), "file:<path>", or "http://host:port"
  std::string chain = "local";
  std::vector<PredicateConfig> predicates = {PredicateConfig{}};
  std::int64_t default_duration_s = 86400;
  std::int64_t poll_interval_s = 1;
  std::uint16_t port = 8787;
  std::filesystem::path keys_dir;
  proving::BackendId backend = proving::BackendId::kSimulated;
  std::filesystem::path presets_path;
  Address operator_address = default_operator();
  bool admin_api = false;

  void validate() const {
    if (default_duration_s <= 0) throw Error(ErrorCode::kInvalidArgument, "session duration must be > 0");
    if (poll_interval_s < 1) throw Error(ErrorCode::kInvalidArgument, "poll interval must be >= 1 s");
    if (predicates.empty()) throw Error(ErrorCode::kInvalidArgument, "no predicates configured");
  }

  const PredicateConfig& predicate(const std::string& id) const {
    for (const auto& p : predicates) {
      if (p.id == id) return p;
    }
    throw Error(ErrorCode::kNotFound, "predicate " + id);
  }

  nlohmann::json to_json() const {
    nlohmann::json preds = nlohmann::json::array();
    for (const auto& p : predicates) {
      preds.push_back({{"id", p.id}, {"threshold_days", p.threshold_days}, {"mode", contracts::binding_mode_name(p.mode)}});
    }
    return {{"vault_path", vault_path.string()},
            {"chain", chain},
            {"predicates", preds},
            {"default_duration_s", default_duration_s},
            {"poll_interval_s", poll_interval_s},
            {"port", port},
            {"keys_dir", keys_dir.string()},
            {"backend", proving::backend_name(backend)},
            {"presets_path", presets_path.string()},
            {"operator", operator_address.hex()},
            {"admin_api", admin_api}};
  }

  static ServiceConfig from_json(const nlohmann::json& j) {
    ServiceConfig c;
    try {
      c.vault_path = j.value("vault_path", std::string());
      c.chain = j.value("chain", std::string("local"));
      if (j.contains("predicates")) {
        c.predicates.clear();
        for (const auto& p : j.at("predicates")) {
          c.predicates.push_back({p.at("id").get<std::string>(), p.at("threshold_days").get<std::uint32_t>(),
                                  contracts::parse_binding_mode(p.value("mode", std::string("bound")))});
        }
      }
      c.default_duration_s = j.value("default_duration_s", std::int64_t{86400});
      c.poll_interval_s = j.value("poll_interval_s", std::int64_t{1});
      c.port = j.value("port", std::uint16_t{8787});
      c.keys_dir = j.value("keys_dir", std::string());
      c.backend = proving::parse_backend(j.value("backend", std::string("simulated")));
      c.presets_path = j.value("presets_path", std::string());
      if (j.contains("operator")) c.operator_address = parse_address(j.at("operator").get<std::string>());
      c.admin_api = j.value("admin_api", false);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kInvalidArgument, std::string("config: ") + e.what());
    }
    c.validate();
    return c;
  }
};

inline std::shared_ptr<ChainEndpoint> open_endpoint(const std::string& where, const Address& admin) {
  if (where == "local") {
    return std::make_shared<LocalEndpoint>(
        std::make_shared<ledger::SharedChain>(contracts::make_compliance_chain(admin)));
  }
  if (where.starts_with("file:")) return std::make_shared<FileEndpoint>(where.substr(5));
  if (where.starts_with("http://")) return std::make_shared<RemoteEndpoint>(where);
  throw Error(ErrorCode::kInvalidArgument, "chain endpoint: " + where);
}

inline std::filesystem::path pk_path(const std::filesystem::path& dir, const std::string& id) { return dir / (id + ".pk"); }
inline std::filesystem::path vk_path(const std::filesystem::path& dir, const std::string& id) { return dir / (id + ".vk"); }

struct ReceiptSummary {
  std::string call;
  std::uint64_t height = 0;
  std::uint64_t gas_used = 0;
  bool ok = false;
  std::string revert_reason;

  nlohmann::json to_json() const {
    return {{"call", call}, {"height", height}, {"gas_used", gas_used}, {"status", ok ? "success" : "reverted"},
            {"revert_reason", revert_reason}};
  }
};

struct SessionView {
  Address subject;
  bn254::Fr service_id;
  std::string service;
  AccessState status = AccessState::kNone;
  std::optional<std::uint64_t> granted_at;
  std::optional<std::uint64_t> expires_at;
  std::uint64_t last_checked = 0;
  std::optional<ReceiptSummary> receipt;

  nlohmann::json to_json() const {
    nlohmann::json j = {{"subject", subject.hex()},
                        {"service", service},
                        {"service_id", circuit::field_hex(service_id)},
                        {"status", contracts::access_state_name(status)},
                        {"last_checked", last_checked}};
    j["granted_at"] = granted_at ? nlohmann::json(*granted_at) : nlohmann::json(nullptr);
    j["expires_at"] = expires_at ? nlohmann::json(*expires_at) : nlohmann::json(nullptr);
    if (receipt) j["receipt"] = receipt->to_json();
    return j;
  }
};

struct GasReport {
  std::string network;
  std::uint64_t grant_gas = 0;
  std::uint64_t revoke_gas = 0;
  economics::FiatCost grant_cost;
  economics::FiatCost revoke_cost;
  ledger::GasSchedule schedule;

  nlohmann::json to_json() const {
    return {{"network", network},
            {"grant_gas", grant_gas},
            {"revoke_gas", revoke_gas},
            {"grant_cost_usd", grant_cost.usd_string()},
            {"revoke_cost_usd", revoke_cost.usd_string()},
            {"gas_breakdown", schedule.to_json()}};
  }
};

inline GasReport gas_report(const ledger::GasSchedule& schedule, const economics::NetworkParams& params) {
  GasReport r;
  r.network = params.name;
  r.schedule = schedule;
  r.grant_gas = schedule.total("grant");
  r.revoke_gas = schedule.total("revoke");
  r.grant_cost = economics::estimate_cost(static_cast<std::int64_t>(r.grant_gas), params);
  r.revoke_cost = economics::estimate_cost(static_cast<std::int64_t>(r.revoke_gas), params);
  return r;
}

// Keys for one predicate, created by provisioning.
struct PredicateKeys {
  proving::ProvingKey pk;
  proving::VerificationKey vk;
};

// Runs the local single-party setup for every configured predicate, writes
// the key files (when keys_dir is set), and registers the predicates on
// chain from the operator account. Already-registered ids are skipped.
inline std::map<std::string, PredicateKeys> provision(const ServiceConfig& cfg, ChainEndpoint& chain,
                                                      const std::optional<Seed>& seed = {}) {
  std::map<std::string, PredicateKeys> out;
  auto cs = circuit::build_age_circuit();
  for (const auto& p : cfg.predicates) {
    if (chain.predicate(p.id)) continue;
    auto kp = proving::setup(cs, cfg.backend, seed);
    Bytes vk_file = proving::encode_verification_key(kp.vk);
    if (!cfg.keys_dir.empty()) {
      std::filesystem::create_directories(cfg.keys_dir);
      proving::write_file_bytes(pk_path(cfg.keys_dir, p.id), proving::encode_proving_key(kp.pk));
      proving::write_file_bytes(vk_path(cfg.keys_dir, p.id), vk_file);
    }
    auto r = chain.submit({cfg.operator_address, std::string(contracts::kComplianceId), "register_predicate",
                           contracts::register_predicate_args(p.id, p.threshold_days, p.mode, vk_file), 0},
                          true);
    if (!r.ok()) throw Error::reverted(r.revert_reason);
    out.emplace(p.id, PredicateKeys{std::move(kp.pk), std::move(kp.vk)});
  }
  return out;
}

// The user agent: vault + prover + chain client.
class LifecycleService {
 public:
  LifecycleService(ServiceConfig cfg, std::shared_ptr<ChainEndpoint> chain)
      : cfg_(std::move(cfg)), chain_(std::move(chain)) {
    cfg_.validate();
  }

  const ServiceConfig& config() const { return cfg_; }
  ChainEndpoint& chain() { return *chain_; }

  void set_proving_key(const std::string& predicate_id, proving::ProvingKey pk) {
    std::lock_guard lock(mu_);
    keys_[predicate_id] = std::make_shared<const proving::ProvingKey>(std::move(pk));
  }

  Address owner() const { return vault::Vault::open(cfg_.vault_path, false).owner(); }

  SessionView grant(const std::string& service, const std::string& attribute = "birthdate",
                    std::optional<std::int64_t> duration = {},
                    const std::string& predicate_id = std::string(contracts::kDefaultPredicateId)) {
    const std::int64_t dur = duration.value_or(cfg_.default_duration_s);
    if (dur <= 0) throw Error(ErrorCode::kInvalidArgument, "duration must be > 0 so expiry exceeds the chain clock");
    if (service.empty()) throw Error(ErrorCode::kInvalidArgument, "service name required");

    vault::Vault vault = vault::Vault::open(cfg_.vault_path, false);
    const vault::AttributeRecord& rec = vault.get_record(attribute);
    auto pred = chain_->predicate(predicate_id);
    if (!pred) throw Error::reverted("UnknownPredicate");
    auto pk = proving_key(predicate_id);

    const std::uint64_t clock = chain_->info().clock;
    circuit::Statement st;
    st.commitment = rec.commitment;
    st.threshold_days = pred->threshold_days;
    st.current_day = static_cast<std::uint32_t>(clock / contracts::kSecondsPerDay);
    st.subject = pred->mode == BindingMode::kBound ? vault.owner() : Address{};
    st.service_id = circuit::service_id_from_name(service);
    st.expiry = clock + static_cast<std::uint64_t>(dur);

    proving::Proof proof = proving::prove(*pk, st, rec.witness());
    auto r = chain_->submit({vault.owner(), std::string(contracts::kComplianceId), "grant",
                             contracts::grant_args(predicate_id, st, proof), 0},
                            true);
    if (!r.ok()) throw Error::reverted(r.revert_reason);
    SessionView view = status(vault.owner(), service);
    view.receipt = ReceiptSummary{"grant", r.height, r.gas_used, true, ""};
    return view;
  }

  SessionView status(const Address& subject, const std::string& service) {
    SessionView v;
    v.subject = subject;
    v.service = service;
    v.service_id = circuit::service_id_from_name(service);
    contracts::AccessStatus s = chain_->check_access(subject, v.service_id);
    v.last_checked = chain_->info().clock;
    v.status = s.state;
    if (s.record) {
      v.granted_at = s.record->granted_at;
      v.expires_at = s.record->expires_at;
    }
    return v;
  }

  ReceiptSummary revoke(const std::string& service) {
    const Address who = owner();
    auto r = chain_->submit({who, std::string(contracts::kComplianceId), "revoke",
                             contracts::revoke_args(circuit::service_id_from_name(service)), 0},
                            true);
    if (!r.ok()) throw Error::reverted(r.revert_reason);
    return {"revoke", r.height, r.gas_used, true, ""};
  }

  std::uint64_t advance_time(std::int64_t seconds) { return chain_->advance_time(seconds); }

  GasReport gas(const std::string& network) {
    auto presets = economics::load_presets(cfg_.presets_path);
    return gas_report(chain_->schedule(), economics::find_preset(presets, network));
  }

 private:
  std::shared_ptr<const proving::ProvingKey> proving_key(const std::string& id) {
    std::lock_guard lock(mu_);
    if (auto it = keys_.find(id); it != keys_.end()) return it->second;
    if (cfg_.keys_dir.empty()) throw Error(ErrorCode::kNotFound, "no proving key for " + id);
    auto pk = std::make_shared<const proving::ProvingKey>(
        proving::decode_proving_key(proving::read_file_bytes(pk_path(cfg_.keys_dir, id))));
    keys_.emplace(id, pk);
    return pk;
  }

  ServiceConfig cfg_;
  std::shared_ptr<ChainEndpoint> chain_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const proving::ProvingKey>> keys_;
};

}  // namespace zkc::service

#endif  // ZKC_SERVICE_LIFECYCLE_HPP_
