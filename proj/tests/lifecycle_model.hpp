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

#ifndef ZKC_TESTS_LIFECYCLE_MODEL_HPP_
#define ZKC_TESTS_LIFECYCLE_MODEL_HPP_

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "zkc/contracts/compliance.hpp"
#include "zkc/proving/backend.hpp"

namespace zkc::testing::lifecycle {

using contracts::AccessState;
namespace zt = zkc::testing;

constexpr std::int64_t kDelta = 50000;    // advance_time step
constexpr std::uint64_t kDuration = 86400;  // session length
constexpr int kDepth = 6;

enum class Op { kGrant, kCheck, kRevoke, kAdvance };
constexpr std::array<Op, 4> kOps = {Op::kGrant, Op::kCheck, Op::kRevoke, Op::kAdvance};

// Reference model, written from the lifecycle description alone.
struct Model {
  bool has_record = false;
  std::uint64_t expires_at = 0;
  std::uint64_t clock = ledger::kDefaultGenesisClock;

  AccessState observe() const {
    if (!has_record) return AccessState::kNone;
    return clock < expires_at ? AccessState::kActive : AccessState::kExpired;
  }
};

// (op, observed state before) -> (outcome, observed state after), with a
// wildcard post for advance where time decides.
struct Row {
  Op op;
  AccessState pre;
  const char* outcome;  // "ok" or the revert reason
  int post;             // AccessState, or -1 for "recompute from the clock"
};

constexpr int kClockDecides = -1;
constexpr Row kTable[] = {
    {Op::kGrant, AccessState::kNone, "ok", static_cast<int>(AccessState::kActive)},
    {Op::kGrant, AccessState::kActive, "ok", static_cast<int>(AccessState::kActive)},
    {Op::kGrant, AccessState::kExpired, "ok", static_cast<int>(AccessState::kActive)},
    {Op::kCheck, AccessState::kNone, "ok", static_cast<int>(AccessState::kNone)},
    {Op::kCheck, AccessState::kActive, "ok", static_cast<int>(AccessState::kActive)},
    {Op::kCheck, AccessState::kExpired, "ok", static_cast<int>(AccessState::kExpired)},
    {Op::kRevoke, AccessState::kNone, "NoActiveRecord", static_cast<int>(AccessState::kNone)},
    {Op::kRevoke, AccessState::kActive, "ok", static_cast<int>(AccessState::kNone)},
    {Op::kRevoke, AccessState::kExpired, "ok", static_cast<int>(AccessState::kNone)},
    {Op::kAdvance, AccessState::kNone, "ok", static_cast<int>(AccessState::kNone)},
    {Op::kAdvance, AccessState::kActive, "ok", kClockDecides},
    {Op::kAdvance, AccessState::kExpired, "ok", static_cast<int>(AccessState::kExpired)},
};

inline const Row& lookup(Op op, AccessState pre) {
  for (const Row& r : kTable) {
    if (r.op == op && r.pre == pre) return r;
  }
  throw std::logic_error("missing table row");
}

// Applies `op` to the model; returns the expected outcome.
inline std::string step_model(Model& m, Op op) {
  const Row& row = lookup(op, m.observe());
  switch (op) {
    case Op::kGrant:
      m.has_record = true;
      m.expires_at = m.clock + kDuration;
      break;
    case Op::kRevoke:
      if (m.has_record) m.has_record = false;
      break;
    case Op::kAdvance:
      m.clock += kDelta;
      break;
    case Op::kCheck:
      break;
  }
  if (row.post != kClockDecides && static_cast<int>(m.observe()) != row.post) {
    throw std::logic_error("model disagrees with its table");
  }
  return row.outcome;
}

inline const Address kAdmin = address_from_u64(0xad);
inline const Address kUser = address_from_u64(1);

struct System {
  ledger::Chain chain;
  const proving::KeyPair* keys;
  bn254::Fr service = circuit::service_id_from_name("tradebase");

  std::string submit(const std::string& call, Bytes args) {
    auto r = chain.submit_tx({kUser, std::string(contracts::kComplianceId), call, std::move(args), chain.next_nonce(kUser)});
    return r.ok() ? "ok" : r.revert_reason;
  }

  std::string step(Op op) {
    switch (op) {
      case Op::kGrant: {
        circuit::Salt salt;
        salt.bytes[0] = 1;
        auto c = zt::make_case(zt::kBorn2000, salt, static_cast<std::uint32_t>(chain.clock() / 86400),
                               circuit::kAdultThresholdDays, kUser, "tradebase", chain.clock() + kDuration);
        return submit("grant", contracts::grant_args("age18", c.st, proving::prove(keys->pk, c.st, c.w)));
      }
      case Op::kRevoke:
        return submit("revoke", contracts::revoke_args(service));
      case Op::kAdvance:
        chain.advance_time(kDelta);
        return "ok";
      case Op::kCheck:
        return "ok";
    }
    return "?";
  }
  AccessState observe() const { return contracts::query_access(chain, kUser, service).state; }
};

struct ModelResult {
  std::size_t sequences = 0;
  std::size_t steps = 0;
  std::string mismatch;  // empty when the chain agreed with the model everywhere
  std::map<std::pair<AccessState, AccessState>, std::size_t> transitions;
};

inline const char* op_name(Op op) {
  switch (op) {
    case Op::kGrant: return "grant";
    case Op::kCheck: return "check";
    case Op::kRevoke: return "revoke";
    case Op::kAdvance: return "advance_time";
  }
  return "?";
}

inline void dfs(const System& sys, const Model& model, int depth, std::vector<Op>& path, ModelResult& res) {
  if (depth == kDepth) {
    ++res.sequences;
    return;
  }
  for (Op op : kOps) {
    if (!res.mismatch.empty()) return;
    System s = sys;
    Model m = model;
    AccessState before = m.observe();
    std::string want = step_model(m, op);
    std::string got = s.step(op);
    path.push_back(op);
    ++res.steps;
    if (got != want || s.observe() != m.observe()) {
      for (Op p : path) res.mismatch += std::string(op_name(p)) + " ";
      res.mismatch += "-> chain " + got + "/" + std::string(contracts::access_state_name(s.observe())) + ", model " +
                      want + "/" + std::string(contracts::access_state_name(m.observe()));
      return;
    }
    ++res.transitions[{before, m.observe()}];
    dfs(s, m, depth + 1, path, res);
    path.pop_back();
  }
}

// Every {grant, check, revoke, advance_time} sequence of length kDepth.
inline ModelResult run_lifecycle_model() {
  Seed seed{};
  seed[0] = 3;
  static const auto keys = proving::setup(circuit::build_age_circuit(), proving::BackendId::kSimulated, seed);
  System sys{contracts::make_compliance_chain(kAdmin), &keys};
  Bytes vk = proving::encode_verification_key(keys.vk);
  auto r = sys.chain.submit_tx({kAdmin, std::string(contracts::kComplianceId), "register_predicate",
                                contracts::register_predicate_args("age18", circuit::kAdultThresholdDays,
                                                                   contracts::BindingMode::kBound, vk),
                                0});
  ModelResult res;
  if (!r.ok()) {
    res.mismatch = "register_predicate reverted: " + r.revert_reason;
    return res;
  }
  std::vector<Op> path;
  dfs(sys, Model{}, 0, path, res);
  return res;
}

}  // namespace zkc::testing::lifecycle

#endif  // ZKC_TESTS_LIFECYCLE_MODEL_HPP_
