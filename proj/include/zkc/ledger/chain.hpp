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

#ifndef ZKC_LEDGER_CHAIN_HPP_
#define ZKC_LEDGER_CHAIN_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zkc/common/bytes.hpp"
#include "zkc/common/crypto.hpp"
#include "zkc/common/error.hpp"
#include "zkc/ledger/gas.hpp"

namespace zkc::ledger {

// 2024-06-01T00:00:00Z
inline constexpr std::uint64_t kDefaultGenesisClock = 1717200000;
inline constexpr int kSnapshotVersion = 1;

struct Genesis {
  GasSchedule schedule = GasSchedule::defaults();
  std::uint64_t clock = kDefaultGenesisClock;
};

struct Event {
  std::uint64_t height = 0;
  std::string contract;
  std::string name;
  Bytes payload;

  // height|contract|event|hex payload
  std::string line() const {
    return std::to_string(height) + "|" + contract + "|" + name + "|" + to_hex(payload);
  }
  static Event parse_line(std::string_view line);
  friend bool operator==(const Event&, const Event&) = default;
};

struct Transaction {
  Address sender;
  std::string target;
  std::string call;
  Bytes args;
  std::uint64_t nonce = 0;
};

enum class TxStatus { kSuccess, kReverted };

struct GasReceipt {
  std::uint64_t height = 0;  // block height the tx was included at
  std::uint64_t gas_used = 0;
  TxStatus status = TxStatus::kSuccess;
  std::string revert_reason;
  std::vector<Event> events;

  bool ok() const { return status == TxStatus::kSuccess; }
};

using StorageMap = std::map<std::string, Bytes, std::less<>>;

// Read-only view handed to contract queries.
class StateView {
 public:
  StateView(const StorageMap& state, std::string_view contract, std::uint64_t clock, std::uint64_t height)
      : state_(state), prefix_(std::string(contract) + "/"), clock_(clock), height_(height) {}

  std::optional<Bytes> get(std::string_view key) const {
    auto it = state_.find(prefix_ + std::string(key));
    if (it == state_.end()) return std::nullopt;
    return it->second;
  }
  std::uint64_t clock() const { return clock_; }
  std::uint64_t height() const { return height_; }

 private:
  const StorageMap& state_;
  std::string prefix_;
  std::uint64_t clock_, height_;
};

// Execution context of one transaction. Writes land in an overlay that the
// chain commits only on success.
class CallContext {
 public:
  CallContext(const StorageMap& base, const Transaction& tx, const GasSchedule& schedule, std::uint64_t clock,
              std::uint64_t height)
      : base_(base), tx_(tx), schedule_(schedule), prefix_(tx.target + "/"), clock_(clock), height_(height) {}

  const Address& sender() const { return tx_.sender; }
  std::string_view call() const { return tx_.call; }
  ByteView args() const { return tx_.args; }
  std::uint64_t clock() const { return clock_; }
  std::uint64_t height() const { return height_; }

  std::optional<Bytes> get(std::string_view key) const {
    std::string full = prefix_ + std::string(key);
    if (auto it = overlay_.find(full); it != overlay_.end()) return it->second;
    auto it = base_.find(full);
    if (it == base_.end()) return std::nullopt;
    return it->second;
  }
  void put(std::string_view key, Bytes value) { overlay_[prefix_ + std::string(key)] = std::move(value); }
  void erase(std::string_view key) { overlay_[prefix_ + std::string(key)] = std::nullopt; }

  // Charges the schedule entry `component` of the current call.
  void charge(std::string_view component) { gas_ += schedule_.component(tx_.call, component); }
  std::uint64_t gas_charged() const { return gas_; }

  void emit(std::string name, Bytes payload) {
    events_.push_back({height_, tx_.target, std::move(name), std::move(payload)});
  }

  [[noreturn]] void revert(std::string reason) { throw Error::reverted(std::move(reason)); }

  const std::map<std::string, std::optional<Bytes>>& overlay() const { return overlay_; }
  std::vector<Event>& events() { return events_; }

 private:
  const StorageMap& base_;
  const Transaction& tx_;
  const GasSchedule& schedule_;
  std::string prefix_;
  std::uint64_t clock_, height_;
  std::map<std::string, std::optional<Bytes>> overlay_;
  std::vector<Event> events_;
  std::uint64_t gas_ = 0;
};

class Contract {
 public:
  virtual ~Contract() = default;
  virtual std::string_view id() const = 0;
  // Runs once at deployment with the deployer as sender; no gas.
  virtual void init(CallContext& ctx) const { (void)ctx; }
  // Throws Error::reverted (via ctx.revert) on contract-level failure.
  virtual void execute(CallContext& ctx) const = 0;
  // Free read-only call.
  virtual Bytes query(const StateView& view, std::string_view call, ByteView args) const = 0;
};

struct TxRecord {
  Transaction tx;
  std::uint64_t height = 0;
  std::uint64_t gas_used = 0;
  TxStatus status = TxStatus::kSuccess;
  std::string revert_reason;
};

// Deterministic single-chain simulator. Not thread-safe; see SharedChain.
class Chain {
 public:
  explicit Chain(Genesis genesis = {}) : schedule_(std::move(genesis.schedule)), clock_(genesis.clock) {
    schedule_.validate();
  }

  void deploy(std::shared_ptr<const Contract> contract, const Address& deployer) {
    std::string id(contract->id());
    if (contracts_.count(id)) throw Error(ErrorCode::kInvalidArgument, "contract already deployed: " + id);
    Transaction tx{deployer, id, "__init", {}, 0};
    CallContext ctx(state_, tx, schedule_, clock_, height_);
    contract->init(ctx);
    commit(ctx);
    contracts_.emplace(id, std::move(contract));
  }

  std::uint64_t height() const { return height_; }
  std::uint64_t clock() const { return clock_; }
  std::uint64_t cumulative_gas() const { return cumulative_gas_; }
  const GasSchedule& schedule() const { return schedule_; }
  const StorageMap& state() const { return state_; }
  const std::vector<Event>& events() const { return events_; }
  const std::vector<TxRecord>& transactions() const { return txs_; }

  std::uint64_t next_nonce(const Address& sender) const {
    auto it = nonces_.find(sender);
    return it == nonces_.end() ? 0 : it->second;
  }

  std::uint64_t advance_time(std::int64_t delta) {
    if (delta <= 0) throw Error(ErrorCode::kNonPositiveDelta);
    clock_ += static_cast<std::uint64_t>(delta);
    return clock_;
  }

  // Executes one contract call atomically. BadNonce and UnknownContract are
  // thrown and leave the chain untouched; contract failures come back as a
  // reverted receipt that still consumes the nonce, a height, and gas.
  GasReceipt submit_tx(const Transaction& tx) {
    auto cit = contracts_.find(tx.target);
    if (cit == contracts_.end()) throw Error(ErrorCode::kUnknownContract, tx.target);
    const std::uint64_t expected = next_nonce(tx.sender);
    if (tx.nonce != expected) {
      throw Error(ErrorCode::kBadNonce, "expected " + std::to_string(expected) + ", got " + std::to_string(tx.nonce));
    }
    const std::uint64_t h = height_ + 1;
    GasReceipt receipt;
    receipt.height = h;
    CallContext ctx(state_, tx, schedule_, clock_, h);
    try {
      cit->second->execute(ctx);
      commit(ctx);
      receipt.events = std::move(ctx.events());
      events_.insert(events_.end(), receipt.events.begin(), receipt.events.end());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kReverted) throw;
      receipt.status = TxStatus::kReverted;
      receipt.revert_reason = e.reason();
    }
    receipt.gas_used = schedule_.tx_base + ctx.gas_charged();
    height_ = h;
    nonces_[tx.sender] = expected + 1;
    cumulative_gas_ += receipt.gas_used;
    txs_.push_back({tx, h, receipt.gas_used, receipt.status, receipt.revert_reason});
    return receipt;
  }

  Bytes query(std::string_view target, std::string_view call, ByteView args) const {
    auto cit = contracts_.find(target);
    if (cit == contracts_.end()) throw Error(ErrorCode::kUnknownContract, std::string(target));
    return cit->second->query(StateView(state_, target, clock_, height_), call, args);
  }

  // Canonical storage encoding: sorted (key, value) pairs, length-prefixed.
  Bytes state_bytes() const {
    ByteWriter w;
    for (const auto& [k, v] : state_) {
      w.str(k);
      w.blob(v);
    }
    return std::move(w).take();
  }
  Digest state_hash() const { return sha256(state_bytes()); }

  nlohmann::json snapshot() const {
    nlohmann::json j;
    j["version"] = kSnapshotVersion;
    j["height"] = height_;
    j["clock"] = clock_;
    j["cumulative_gas"] = cumulative_gas_;
    j["schedule"] = schedule_.to_json();
    j["contracts"] = nlohmann::json::array();
    for (const auto& [id, _] : contracts_) j["contracts"].push_back(id);
    j["nonces"] = nlohmann::json::object();
    for (const auto& [a, n] : nonces_) j["nonces"][a.hex()] = n;
    j["state"] = nlohmann::json::object();
    for (const auto& [k, v] : state_) j["state"][k] = to_hex(v);
    j["events"] = nlohmann::json::array();
    for (const auto& e : events_) j["events"].push_back(e.line());
    j["transactions"] = nlohmann::json::array();
    for (const auto& t : txs_) {
      j["transactions"].push_back({{"height", t.height},
                                   {"sender", t.tx.sender.hex()},
                                   {"target", t.tx.target},
                                   {"call", t.tx.call},
                                   {"args", to_hex(t.tx.args)},
                                   {"nonce", t.tx.nonce},
                                   {"gas_used", t.gas_used},
                                   {"status", t.status == TxStatus::kSuccess ? "success" : "reverted"},
                                   {"revert_reason", t.revert_reason}});
    }
    return j;
  }

  std::string snapshot_text() const { return snapshot().dump(1) + "\n"; }

  // Rebuilds a chain from a snapshot; `contracts` supplies the code for every
  // contract id the snapshot lists. Errors are MalformedSnapshot.
  static Chain from_snapshot(const nlohmann::json& j, const std::vector<std::shared_ptr<const Contract>>& contracts) {
    auto fail = [](const std::string& why) { return Error(ErrorCode::kMalformedSnapshot, why); };
    try {
      if (j.at("version").get<int>() != kSnapshotVersion) throw fail("version");
      Genesis g;
      g.schedule = GasSchedule::from_json(j.at("schedule"));
      g.clock = j.at("clock").get<std::uint64_t>();
      Chain c(g);
      c.height_ = j.at("height").get<std::uint64_t>();
      c.cumulative_gas_ = j.at("cumulative_gas").get<std::uint64_t>();
      for (const auto& id : j.at("contracts")) {
        std::string name = id.get<std::string>();
        bool found = false;
        for (const auto& k : contracts) {
          if (k->id() == name) {
            c.contracts_.emplace(name, k);
            found = true;
          }
        }
        if (!found) throw fail("no code for contract " + name);
      }
      for (const auto& [a, n] : j.at("nonces").items()) {
        Address addr;
        if (!Address::parse(a, addr)) throw fail("nonce address");
        c.nonces_[addr] = n.get<std::uint64_t>();
      }
      for (const auto& [k, v] : j.at("state").items()) {
        Bytes b;
        if (!from_hex(v.get<std::string>(), b)) throw fail("state value " + k);
        c.state_.emplace(k, std::move(b));
      }
      for (const auto& e : j.at("events")) c.events_.push_back(Event::parse_line(e.get<std::string>()));
      for (const auto& t : j.at("transactions")) {
        TxRecord r;
        r.height = t.at("height").get<std::uint64_t>();
        if (!Address::parse(t.at("sender").get<std::string>(), r.tx.sender)) throw fail("tx sender");
        r.tx.target = t.at("target").get<std::string>();
        r.tx.call = t.at("call").get<std::string>();
        if (!from_hex(t.at("args").get<std::string>(), r.tx.args)) throw fail("tx args");
        r.tx.nonce = t.at("nonce").get<std::uint64_t>();
        r.gas_used = t.at("gas_used").get<std::uint64_t>();
        r.status = t.at("status").get<std::string>() == "success" ? TxStatus::kSuccess : TxStatus::kReverted;
        r.revert_reason = t.at("revert_reason").get<std::string>();
        c.txs_.push_back(std::move(r));
      }
      return c;
    } catch (const nlohmann::json::exception& e) {
      throw fail(e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kMalformedSnapshot) throw;
      throw fail(e.what());
    }
  }

 private:
  void commit(const CallContext& ctx) {
    for (const auto& [k, v] : ctx.overlay()) {
      if (v) {
        state_[k] = *v;
      } else {
        state_.erase(k);
      }
    }
  }

  GasSchedule schedule_;
  std::uint64_t clock_ = 0;
  std::uint64_t height_ = 0;
  std::uint64_t cumulative_gas_ = 0;
  StorageMap state_;
  std::vector<Event> events_;
  std::vector<TxRecord> txs_;
  std::map<Address, std::uint64_t> nonces_;
  std::map<std::string, std::shared_ptr<const Contract>, std::less<>> contracts_;
};

inline Event Event::parse_line(std::string_view line) {
  auto fail = [&] { return Error(ErrorCode::kMalformedSnapshot, "event line: " + std::string(line)); };
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '|') {
      parts.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 4) throw fail();
  Event e;
  try {
    std::size_t used = 0;
    e.height = std::stoull(std::string(parts[0]), &used);
    if (used != parts[0].size()) throw fail();
  } catch (const std::logic_error&) {
    throw fail();
  }
  e.contract = parts[1];
  e.name = parts[2];
  if (!from_hex(parts[3], e.payload)) throw fail();
  return e;
}

}  // namespace zkc::ledger

#endif  // ZKC_LEDGER_CHAIN_HPP_
