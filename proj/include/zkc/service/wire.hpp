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

#ifndef ZKC_SERVICE_WIRE_HPP_
#define ZKC_SERVICE_WIRE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zkc/circuit/age_circuit.hpp"
#include "zkc/common/bytes.hpp"
#include "zkc/common/error.hpp"
#include "zkc/contracts/compliance.hpp"
#include "zkc/ledger/chain.hpp"

// JSON forms shared by the HTTP API and the remote chain client.
namespace zkc::service {

using nlohmann::json;

inline Address parse_address(const std::string& hex) {
  Address a;
  if (!Address::parse(hex, a)) throw Error(ErrorCode::kInvalidArgument, "address: " + hex);
  return a;
}

inline bn254::Fr parse_field(const std::string& hex) {
  bn254::Fr f;
  if (!circuit::parse_field_hex(hex, f)) throw Error(ErrorCode::kInvalidArgument, "field element: " + hex);
  return f;
}

inline Bytes parse_bytes(const std::string& hex) {
  Bytes b;
  if (!from_hex(hex, b)) throw Error(ErrorCode::kInvalidArgument, "hex bytes");
  return b;
}

inline json receipt_to_json(const ledger::GasReceipt& r) {
  json events = json::array();
  for (const auto& e : r.events) events.push_back(e.line());
  return {{"height", r.height},
          {"gas_used", r.gas_used},
          {"status", r.ok() ? "success" : "reverted"},
          {"revert_reason", r.revert_reason},
          {"events", events}};
}

inline ledger::GasReceipt receipt_from_json(const json& j) {
  ledger::GasReceipt r;
  r.height = j.at("height").get<std::uint64_t>();
  r.gas_used = j.at("gas_used").get<std::uint64_t>();
  r.status = j.at("status").get<std::string>() == "success" ? ledger::TxStatus::kSuccess : ledger::TxStatus::kReverted;
  r.revert_reason = j.at("revert_reason").get<std::string>();
  for (const auto& e : j.at("events")) r.events.push_back(ledger::Event::parse_line(e.get<std::string>()));
  return r;
}

inline json tx_to_json(const ledger::Transaction& tx, bool with_nonce) {
  json j = {{"sender", tx.sender.hex()}, {"target", tx.target}, {"call", tx.call}, {"args", to_hex(tx.args)}};
  if (with_nonce) j["nonce"] = tx.nonce;
  return j;
}

inline ledger::Transaction tx_from_json(const json& j) {
  ledger::Transaction tx;
  tx.sender = parse_address(j.at("sender").get<std::string>());
  tx.target = j.at("target").get<std::string>();
  tx.call = j.at("call").get<std::string>();
  tx.args = parse_bytes(j.at("args").get<std::string>());
  tx.nonce = j.value("nonce", std::uint64_t{0});
  return tx;
}

inline json access_to_json(const contracts::AccessStatus& s) {
  json j = {{"status", contracts::access_state_name(s.state)}};
  if (s.record) {
    j["subject"] = s.record->subject.hex();
    j["service_id"] = circuit::field_hex(s.record->service_id);
    j["predicate_id"] = s.record->predicate_id;
    j["granted_at"] = s.record->granted_at;
    j["expires_at"] = s.record->expires_at;
  }
  return j;
}

inline contracts::AccessStatus access_from_json(const json& j) {
  contracts::AccessStatus s;
  const std::string st = j.at("status").get<std::string>();
  if (st == "none") return s;
  s.state = st == "active" ? contracts::AccessState::kActive : contracts::AccessState::kExpired;
  contracts::AccessRecord r;
  r.subject = parse_address(j.at("subject").get<std::string>());
  r.service_id = parse_field(j.at("service_id").get<std::string>());
  r.predicate_id = j.at("predicate_id").get<std::string>();
  r.granted_at = j.at("granted_at").get<std::uint64_t>();
  r.expires_at = j.at("expires_at").get<std::uint64_t>();
  s.record = r;
  return s;
}

inline json predicate_to_json(const contracts::PredicateInfo& p) {
  return {{"id", p.id},
          {"threshold_days", p.threshold_days},
          {"mode", contracts::binding_mode_name(p.mode)},
          {"vk", to_hex(p.vk)}};
}

inline contracts::PredicateInfo predicate_from_json(const json& j) {
  contracts::PredicateInfo p;
  p.id = j.at("id").get<std::string>();
  p.threshold_days = j.at("threshold_days").get<std::uint32_t>();
  p.mode = contracts::parse_binding_mode(j.at("mode").get<std::string>());
  p.vk = parse_bytes(j.at("vk").get<std::string>());
  return p;
}

inline json error_to_json(const Error& e) {
  return {{"error", {{"code", std::string(to_string(e.code()))}, {"reason", e.reason()}, {"message", e.what()}}}};
}

}  // namespace zkc::service

#endif  // ZKC_SERVICE_WIRE_HPP_
