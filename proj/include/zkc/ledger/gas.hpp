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

#ifndef ZKC_LEDGER_GAS_HPP_
#define ZKC_LEDGER_GAS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zkc/common/error.hpp"

namespace zkc::ledger {

// Per-call gas components plus the flat per-transaction base.
struct GasSchedule {
  std::uint64_t tx_base = 0;
  std::map<std::string, std::map<std::string, std::uint64_t>, std::less<>> calls;

  static GasSchedule defaults() {
    GasSchedule s;
    s.tx_base = 21000;
    s.calls["grant"] = {{"verify_proof", 200000}, {"storage_write", 22000}, {"event", 7000}};
    s.calls["revoke"] = {{"storage_delete", 14000}, {"event", 5000}};
    s.calls["register_predicate"] = {{"storage_write", 22000}, {"event", 5000}};
    return s;
  }

  // Entries every chain must price.
  static const std::vector<std::pair<std::string_view, std::string_view>>& required() {
    static const std::vector<std::pair<std::string_view, std::string_view>> kRequired = {
        {"grant", "verify_proof"},   {"grant", "storage_write"},  {"grant", "event"},
        {"revoke", "storage_delete"}, {"revoke", "event"},         {"register_predicate", "storage_write"},
        {"register_predicate", "event"},
    };
    return kRequired;
  }

  void validate() const {
    if (tx_base == 0) throw Error(ErrorCode::kIncompleteSchedule, "tx_base");
    for (const auto& [call, comp] : required()) {
      auto it = calls.find(call);
      if (it == calls.end()) throw Error(ErrorCode::kIncompleteSchedule, std::string(call));
      if (it->second.find(std::string(comp)) == it->second.end()) {
        throw Error(ErrorCode::kIncompleteSchedule, std::string(call) + "." + std::string(comp));
      }
    }
  }

  std::uint64_t component(std::string_view call, std::string_view name) const {
    auto it = calls.find(call);
    if (it != calls.end()) {
      auto jt = it->second.find(std::string(name));
      if (jt != it->second.end()) return jt->second;
    }
    throw Error(ErrorCode::kIncompleteSchedule, std::string(call) + "." + std::string(name));
  }

  // Gas of a call that runs every component once.
  std::uint64_t total(std::string_view call) const {
    std::uint64_t sum = tx_base;
    auto it = calls.find(call);
    if (it == calls.end()) throw Error(ErrorCode::kIncompleteSchedule, std::string(call));
    for (const auto& [_, g] : it->second) sum += g;
    return sum;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["tx_base"] = tx_base;
    j["calls"] = nlohmann::json::object();
    for (const auto& [call, comps] : calls) {
      for (const auto& [name, g] : comps) j["calls"][call][name] = g;
    }
    return j;
  }

  static GasSchedule from_json(const nlohmann::json& j) {
    GasSchedule s;
    s.tx_base = j.at("tx_base").get<std::uint64_t>();
    for (const auto& [call, comps] : j.at("calls").items()) {
      for (const auto& [name, g] : comps.items()) s.calls[call][name] = g.get<std::uint64_t>();
    }
    return s;
  }

  friend bool operator==(const GasSchedule&, const GasSchedule&) = default;
};

}  // namespace zkc::ledger

#endif  // ZKC_LEDGER_GAS_HPP_
