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

#ifndef ZKC_ECONOMICS_COST_HPP_
#define ZKC_ECONOMICS_COST_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zkc/common/error.hpp"
#include "zkc/economics/decimal.hpp"

namespace zkc::economics {

inline constexpr unsigned kUsdPlaces = 4;

struct NetworkParams {
  std::string name;
  Decimal gas_price_gwei;
  Decimal token_usd;
  Decimal overhead_usd;

  void validate() const {
    if (gas_price_gwei <= Decimal()) throw Error(ErrorCode::kInvalidDecimal, name + ": gas price must be > 0");
    if (token_usd.is_negative() || overhead_usd.is_negative()) {
      throw Error(ErrorCode::kInvalidDecimal, name + ": negative parameter");
    }
  }
};

struct FiatCost {
  Decimal usd;  // exact
  Decimal gas_component;
  Decimal overhead;

  std::string usd_string() const { return usd.to_string(kUsdPlaces); }
};

inline const Decimal& gwei() {
  static const Decimal kGwei(1, 9);
  return kGwei;
}

// usd = gas * gas_price * 1e-9 * token_usd + overhead, exactly.
inline FiatCost estimate_cost(std::int64_t gas, const NetworkParams& p) {
  if (gas <= 0) throw Error(ErrorCode::kNonPositiveGas);
  p.validate();
  FiatCost c;
  c.gas_component = Decimal::from_int(gas) * p.gas_price_gwei * gwei() * p.token_usd;
  c.overhead = p.overhead_usd;
  c.usd = c.gas_component + c.overhead;
  return c;
}

inline std::vector<NetworkParams> builtin_presets() {
  return {
      {"mainnet", Decimal::parse("20"), Decimal::parse("3000"), Decimal::parse("0")},
      {"l2", Decimal::parse("0.1"), Decimal::parse("3000"), Decimal::parse("0.02")},
  };
}

// [{name, gas_price_gwei, token_usd, overhead_usd}], decimal strings.
inline std::vector<NetworkParams> parse_presets(const nlohmann::json& j) {
  std::vector<NetworkParams> out;
  try {
    for (const auto& e : j) {
      NetworkParams p{e.at("name").get<std::string>(), Decimal::parse(e.at("gas_price_gwei").get<std::string>()),
                      Decimal::parse(e.at("token_usd").get<std::string>()),
                      Decimal::parse(e.value("overhead_usd", std::string("0")))};
      p.validate();
      out.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidDecimal, e.what());
  }
  return out;
}

inline nlohmann::json presets_to_json(const std::vector<NetworkParams>& ps) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : ps) {
    j.push_back({{"name", p.name},
                 {"gas_price_gwei", p.gas_price_gwei.to_string()},
                 {"token_usd", p.token_usd.to_string()},
                 {"overhead_usd", p.overhead_usd.to_string()}});
  }
  return j;
}

// Builtins, with entries from `path` (if given) replacing or adding by name.
inline std::vector<NetworkParams> load_presets(const std::filesystem::path& path = {}) {
  auto presets = builtin_presets();
  if (path.empty()) return presets;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read presets " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidDecimal, e.what());
  }
  for (auto& p : parse_presets(j)) {
    bool replaced = false;
    for (auto& q : presets) {
      if (q.name == p.name) {
        q = p;
        replaced = true;
      }
    }
    if (!replaced) presets.push_back(std::move(p));
  }
  return presets;
}

inline const NetworkParams& find_preset(const std::vector<NetworkParams>& ps, std::string_view name) {
  for (const auto& p : ps) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::kUnknownNetwork, std::string(name));
}

}  // namespace zkc::economics

#endif  // ZKC_ECONOMICS_COST_HPP_
