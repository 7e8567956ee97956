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

#include <random>
#include <thread>

#include "zkc/ledger/chain.hpp"
#include "zkc/ledger/shared_chain.hpp"

namespace {

using namespace zkc;
using namespace zkc::ledger;

// Minimal key/value contract: set writes then may revert, del erases.
class KvContract : public Contract {
 public:
  std::string_view id() const override { return "kv"; }
  void init(CallContext& ctx) const override { ctx.put("owner", Bytes(ctx.sender().bytes.begin(), ctx.sender().bytes.end())); }
  void execute(CallContext& ctx) const override {
    ByteReader r(ctx.args());
    std::string key = r.str();
    Bytes value = r.blob();
    if (ctx.call() == "set") {
      ctx.charge("storage_write");
      ctx.put(key, value);
      ctx.charge("event");
      ctx.emit("Set", Bytes(key.begin(), key.end()));
      if (value.empty()) ctx.revert("EmptyValue");
    } else if (ctx.call() == "del") {
      if (!ctx.get(key)) ctx.revert("Missing");
      ctx.charge("storage_delete");
      ctx.erase(key);
    } else {
      ctx.revert("UnknownCall");
    }
  }
  Bytes query(const StateView& view, std::string_view call, ByteView args) const override {
    auto v = view.get(std::string(args.begin(), args.end()));
    return v ? *v : Bytes{};
  }
};

Genesis test_genesis() {
  Genesis g;
  g.schedule.calls["set"] = {{"storage_write", 20000}, {"event", 1000}};
  g.schedule.calls["del"] = {{"storage_delete", 5000}};
  return g;
}

Bytes kv_args(const std::string& key, const std::string& value) {
  ByteWriter w;
  w.str(key);
  w.str(value);
  return std::move(w).take();
}

Chain kv_chain() {
  Chain c(test_genesis());
  c.deploy(std::make_shared<KvContract>(), address_from_u64(9));
  return c;
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

TEST(GasSchedule, DefaultsAndTotals) {
  auto s = GasSchedule::defaults();
  EXPECT_NO_THROW(s.validate());
  EXPECT_EQ(s.tx_base, 21000u);
  EXPECT_EQ(s.total("grant"), 250000u);
  EXPECT_EQ(s.total("revoke"), 40000u);
  EXPECT_EQ(s.total("register_predicate"), 48000u);
  EXPECT_EQ(GasSchedule::from_json(s.to_json()), s);
}

TEST(GasSchedule, IncompleteRejected) {
  for (const auto& [call, comp] : GasSchedule::required()) {
    auto s = GasSchedule::defaults();
    s.calls[std::string(call)].erase(std::string(comp));
    EXPECT_EQ(code_of([&] { s.validate(); }), ErrorCode::kIncompleteSchedule) << call << "." << comp;
    EXPECT_EQ(code_of([&] { Chain c(Genesis{s, 0}); }), ErrorCode::kIncompleteSchedule);
  }
  auto s = GasSchedule::defaults();
  s.tx_base = 0;
  EXPECT_EQ(code_of([&] { s.validate(); }), ErrorCode::kIncompleteSchedule);
}

TEST(Chain, DeployRunsInit) {
  Chain c = kv_chain();
  EXPECT_EQ(c.height(), 0u);
  const Address deployer = address_from_u64(9);
  EXPECT_EQ(c.query("kv", "get", as_bytes("owner")), Bytes(deployer.bytes.begin(), deployer.bytes.end()));
  EXPECT_THROW(c.deploy(std::make_shared<KvContract>(), address_from_u64(1)), Error);
}

TEST(Chain, SuccessfulTxChargesGasAndEmits) {
  Chain c = kv_chain();
  auto r = c.submit_tx({address_from_u64(1), "kv", "set", kv_args("a", "1"), 0});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.height, 1u);
  EXPECT_EQ(r.gas_used, 21000u + 20000u + 1000u);
  ASSERT_EQ(r.events.size(), 1u);
  EXPECT_EQ(r.events[0].line(), "1|kv|Set|61");
  EXPECT_EQ(c.query("kv", "get", as_bytes("a")), Bytes{'1'});
  EXPECT_EQ(c.cumulative_gas(), r.gas_used);
  EXPECT_EQ(c.next_nonce(address_from_u64(1)), 1u);
}

TEST(Chain, RevertIsAtomicButConsumesNonceAndGas) {
  Chain c = kv_chain();
  auto before = c.state_bytes();
  auto r = c.submit_tx({address_from_u64(1), "kv", "set", kv_args("a", ""), 0});
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.revert_reason, "EmptyValue");
  EXPECT_TRUE(r.events.empty());
  EXPECT_EQ(r.gas_used, 21000u + 20000u + 1000u);
  EXPECT_EQ(c.state_bytes(), before);
  EXPECT_TRUE(c.events().empty());
  EXPECT_EQ(c.height(), 1u);
  EXPECT_EQ(c.next_nonce(address_from_u64(1)), 1u);
  ASSERT_EQ(c.transactions().size(), 1u);
  EXPECT_EQ(c.transactions()[0].status, TxStatus::kReverted);
}

TEST(Chain, BadNonceAndUnknownContractLeaveChainUntouched) {
  Chain c = kv_chain();
  EXPECT_EQ(code_of([&] { c.submit_tx({address_from_u64(1), "kv", "set", kv_args("a", "1"), 1}); }),
            ErrorCode::kBadNonce);
  EXPECT_EQ(code_of([&] { c.submit_tx({address_from_u64(1), "nope", "set", {}, 0}); }),
            ErrorCode::kUnknownContract);
  EXPECT_EQ(c.height(), 0u);
  EXPECT_EQ(c.next_nonce(address_from_u64(1)), 0u);
  EXPECT_TRUE(c.submit_tx({address_from_u64(1), "kv", "set", kv_args("a", "1"), 0}).ok());
  EXPECT_EQ(code_of([&] { c.submit_tx({address_from_u64(1), "kv", "set", kv_args("a", "1"), 0}); }),
            ErrorCode::kBadNonce);
  EXPECT_EQ(code_of([&] { c.query("nope", "get", {}); }), ErrorCode::kUnknownContract);
}

TEST(Chain, Clock) {
  Chain c = kv_chain();
  EXPECT_EQ(c.clock(), kDefaultGenesisClock);
  EXPECT_EQ(c.advance_time(86400), kDefaultGenesisClock + 86400);
  EXPECT_EQ(code_of([&] { c.advance_time(0); }), ErrorCode::kNonPositiveDelta);
  EXPECT_EQ(code_of([&] { c.advance_time(-5); }), ErrorCode::kNonPositiveDelta);
  EXPECT_EQ(c.height(), 0u);
}

TEST(Chain, EraseRemovesKey) {
  Chain c = kv_chain();
  c.submit_tx({address_from_u64(1), "kv", "set", kv_args("a", "1"), 0});
  auto r = c.submit_tx({address_from_u64(1), "kv", "del", kv_args("a", ""), 1});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.gas_used, 26000u);
  EXPECT_TRUE(c.query("kv", "get", as_bytes("a")).empty());
  EXPECT_EQ(c.submit_tx({address_from_u64(1), "kv", "del", kv_args("a", ""), 2}).revert_reason, "Missing");
}

// Same scripted workload against a fresh chain.
Chain run_script(std::uint64_t seed, int n) {
  Chain c = kv_chain();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i) {
    Address a = address_from_u64(1 + rng() % 4);
    std::string key = "k" + std::to_string(rng() % 10);
    switch (rng() % 4) {
      case 0: c.submit_tx({a, "kv", "del", kv_args(key, ""), c.next_nonce(a)}); break;
      case 1: c.advance_time(1 + static_cast<std::int64_t>(rng() % 1000)); break;
      default: c.submit_tx({a, "kv", "set", kv_args(key, rng() % 5 ? std::to_string(rng()) : ""), c.next_nonce(a)});
    }
  }
  return c;
}

TEST(Chain, ReplayIsByteIdentical) {
  Chain a = run_script(5, 100), b = run_script(5, 100);
  EXPECT_EQ(a.snapshot_text(), b.snapshot_text());
  EXPECT_EQ(a.state_hash(), b.state_hash());
  EXPECT_NE(run_script(6, 100).snapshot_text(), a.snapshot_text());
}

TEST(Chain, SnapshotRoundTrip) {
  Chain a = run_script(8, 60);
  std::vector<std::shared_ptr<const Contract>> code = {std::make_shared<KvContract>()};
  Chain b = Chain::from_snapshot(nlohmann::json::parse(a.snapshot_text()), code);
  EXPECT_EQ(b.snapshot_text(), a.snapshot_text());
  // the restored chain keeps running identically
  Address x = address_from_u64(1);
  auto ra = a.submit_tx({x, "kv", "set", kv_args("z", "9"), a.next_nonce(x)});
  auto rb = b.submit_tx({x, "kv", "set", kv_args("z", "9"), b.next_nonce(x)});
  EXPECT_EQ(ra.height, rb.height);
  EXPECT_EQ(a.snapshot_text(), b.snapshot_text());
  EXPECT_EQ(code_of([&] { Chain::from_snapshot(nlohmann::json::parse(a.snapshot_text()), {}); }),
            ErrorCode::kMalformedSnapshot);
  auto j = nlohmann::json::parse(a.snapshot_text());
  j["events"][0] = "garbage";
  EXPECT_EQ(code_of([&] { Chain::from_snapshot(j, code); }), ErrorCode::kMalformedSnapshot);
  EXPECT_EQ(code_of([&] { Chain::from_snapshot(nlohmann::json::object(), code); }), ErrorCode::kMalformedSnapshot);
}

TEST(Event, LineRoundTrip) {
  Event e{12, "compliance", "Granted", {0, 1, 0xff}};
  EXPECT_EQ(e.line(), "12|compliance|Granted|0001ff");
  EXPECT_EQ(Event::parse_line(e.line()), e);
  EXPECT_THROW(Event::parse_line("1|x|y"), Error);
  EXPECT_THROW(Event::parse_line("q|x|y|00"), Error);
}

TEST(SharedChain, ConcurrentWritersSerialize) {
  SharedChain sc(kv_chain());
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      Address a = address_from_u64(100 + t);
      for (int i = 0; i < 50; ++i) {
        sc.write([&](Chain& c) { return c.submit_tx({a, "kv", "set", kv_args("t" + std::to_string(t), "v"), c.next_nonce(a)}); });
        sc.read([](const Chain& c) { return c.height(); });
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(sc.read([](const Chain& c) { return c.height(); }), 200u);
  EXPECT_EQ(sc.read([](const Chain& c) { return c.next_nonce(address_from_u64(102)); }), 50u);
}

}  // namespace
