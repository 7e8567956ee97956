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

#include <atomic>
#include <chrono>
#include <thread>

#include "httplib.h"
#include "test_support.hpp"
#include "zkc/service/http_api.hpp"
#include "zkc/service/lifecycle.hpp"

namespace {

using namespace zkc;
using namespace zkc::service;
namespace zt = zkc::testing;
using json = nlohmann::json;

const Address kUser = address_from_u64(1);

circuit::Salt fixed_salt() {
  circuit::Salt s;
  for (std::size_t i = 0; i < s.bytes.size(); ++i) s.bytes[i] = static_cast<std::uint8_t>(0xa0 + i);
  return s;
}

Seed test_seed() {
  Seed s{};
  s[0] = 0x5e;
  return s;
}

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    zt::write_fixed_vault(dir_ / "vault.json", kUser, "birthdate", zt::kBorn2000, fixed_salt());
    cfg_.vault_path = dir_ / "vault.json";
    cfg_.keys_dir = dir_ / "keys";
    chain_ = open_endpoint("local", cfg_.operator_address);
    provision(cfg_, *chain_, test_seed());
    svc_ = std::make_unique<LifecycleService>(cfg_, chain_);
  }

  zt::TempDir dir_;
  ServiceConfig cfg_;
  std::shared_ptr<ChainEndpoint> chain_;
  std::unique_ptr<LifecycleService> svc_;
};

ErrorCode code_of(const std::function<void()>& f, std::string* reason = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (reason) *reason = e.reason();
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST_F(ServiceTest, ProvisionWritesKeysAndRegisters) {
  EXPECT_TRUE(std::filesystem::exists(pk_path(cfg_.keys_dir, "age18")));
  EXPECT_TRUE(std::filesystem::exists(vk_path(cfg_.keys_dir, "age18")));
  auto p = chain_->predicate("age18");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->threshold_days, 6574u);
  // idempotent
  EXPECT_TRUE(provision(cfg_, *chain_, test_seed()).empty());
}

TEST_F(ServiceTest, GrantStatusExpireRevoke) {
  auto v = svc_->grant("tradebase");
  EXPECT_EQ(v.status, contracts::AccessState::kActive);
  ASSERT_TRUE(v.receipt);
  EXPECT_EQ(v.receipt->gas_used, 250000u);
  EXPECT_EQ(*v.expires_at, ledger::kDefaultGenesisClock + 86400);
  EXPECT_EQ(svc_->status(kUser, "tradebase").status, contracts::AccessState::kActive);
  EXPECT_EQ(svc_->status(kUser, "other").status, contracts::AccessState::kNone);

  svc_->advance_time(86400);
  EXPECT_EQ(svc_->status(kUser, "tradebase").status, contracts::AccessState::kExpired);

  auto g2 = svc_->grant("tradebase");
  EXPECT_EQ(g2.status, contracts::AccessState::kActive);
  auto r = svc_->revoke("tradebase");
  EXPECT_EQ(r.gas_used, 40000u);
  EXPECT_EQ(svc_->status(kUser, "tradebase").status, contracts::AccessState::kNone);
  std::string reason;
  EXPECT_EQ(code_of([&] { svc_->revoke("tradebase"); }, &reason), ErrorCode::kReverted);
  EXPECT_EQ(reason, "NoActiveRecord");
}

TEST_F(ServiceTest, UnderageFailsBeforeChain) {
  zt::write_fixed_vault(dir_ / "minor.json", kUser, "birthdate", vault::parse_date("2010-06-01"), fixed_salt());
  ServiceConfig c = cfg_;
  c.vault_path = dir_ / "minor.json";
  LifecycleService minor(c, chain_);
  auto h = chain_->info().height;
  EXPECT_EQ(code_of([&] { minor.grant("tradebase"); }), ErrorCode::kUnsatisfiedWitness);
  EXPECT_EQ(chain_->info().height, h);
  EXPECT_EQ(minor.status(kUser, "tradebase").status, contracts::AccessState::kNone);
}

TEST_F(ServiceTest, NonPositiveDurationRejected) {
  auto h = chain_->info().height;
  EXPECT_EQ(code_of([&] { svc_->grant("tradebase", "birthdate", 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { svc_->grant("tradebase", "birthdate", -5); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(chain_->info().height, h);
  EXPECT_EQ(code_of([&] { svc_->grant("tradebase", "nonexistent"); }), ErrorCode::kNotFound);
  std::string reason;
  EXPECT_EQ(code_of([&] { svc_->grant("tradebase", "birthdate", {}, "age99"); }, &reason), ErrorCode::kReverted);
  EXPECT_EQ(reason, "UnknownPredicate");
}

TEST_F(ServiceTest, ProvingKeyLoadedFromDisk) {
  // a fresh service has no cached keys and must read keys_dir
  LifecycleService other(cfg_, chain_);
  EXPECT_EQ(other.grant("svc-a").status, contracts::AccessState::kActive);
  ServiceConfig nokeys = cfg_;
  nokeys.keys_dir.clear();
  LifecycleService bare(nokeys, chain_);
  EXPECT_EQ(code_of([&] { bare.grant("svc-b"); }), ErrorCode::kNotFound);
}

TEST_F(ServiceTest, GasReport) {
  auto g = svc_->gas("mainnet");
  EXPECT_EQ(g.grant_gas, 250000u);
  EXPECT_EQ(g.grant_cost.usd_string(), "15.0000");
  EXPECT_EQ(svc_->gas("l2").grant_cost.usd_string(), "0.0950");
  EXPECT_EQ(code_of([&] { svc_->gas("nowhere"); }), ErrorCode::kUnknownNetwork);
}

TEST_F(ServiceTest, ConfigRoundTrip) {
  ServiceConfig c = ServiceConfig::from_json(cfg_.to_json());
  EXPECT_EQ(c.to_json(), cfg_.to_json());
  json bad = cfg_.to_json();
  bad["default_duration_s"] = 0;
  EXPECT_EQ(code_of([&] { ServiceConfig::from_json(bad); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { open_endpoint("ftp://x", cfg_.operator_address); }), ErrorCode::kInvalidArgument);
}

TEST_F(ServiceTest, PollingObservesRevocationWithinInterval) {
  ASSERT_EQ(svc_->grant("tradebase").status, contracts::AccessState::kActive);
  std::atomic<bool> locked{false};
  const auto interval = std::chrono::milliseconds(100);
  std::chrono::steady_clock::time_point revoked_at;
  std::chrono::steady_clock::time_point seen_at;
  std::thread poller([&] {
    while (!locked) {
      if (svc_->status(kUser, "tradebase").status != contracts::AccessState::kActive) {
        seen_at = std::chrono::steady_clock::now();
        locked = true;
      } else {
        std::this_thread::sleep_for(interval);
      }
    }
  });
  std::this_thread::sleep_for(3 * interval);
  revoked_at = std::chrono::steady_clock::now();
  svc_->revoke("tradebase");
  poller.join();
  EXPECT_LE(seen_at - revoked_at, 2 * interval);
}

TEST_F(ServiceTest, ConcurrentStatusReads) {
  svc_->grant("tradebase");
  std::vector<std::thread> readers;
  std::atomic<int> active{0};
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&] {
      for (int i = 0; i < 100; ++i) active += svc_->status(kUser, "tradebase").status == contracts::AccessState::kActive;
    });
  }
  for (int i = 0; i < 5; ++i) svc_->grant("svc" + std::to_string(i));
  for (auto& r : readers) r.join();
  EXPECT_EQ(active.load(), 400);
}

// ---- HTTP ---------------------------------------------------------------

struct Traffic {
  std::mutex mu;
  std::string all;
  void add(const httplib::Request& q, const httplib::Response& r) {
    std::lock_guard lock(mu);
    all += q.method + " " + q.target + " " + q.path + "\n";
    for (const auto& [k, v] : q.params) all += k + "=" + v + "\n";
    all += q.body + "\n" + std::to_string(r.status) + " " + r.body + "\n";
  }
};

// Every encoding of the secret value or salt the service could leak.
std::vector<std::string> secret_needles() {
  const auto salt = fixed_salt();
  auto bw = [](std::uint32_t v) {
    Bytes b = {static_cast<std::uint8_t>(v >> 24), static_cast<std::uint8_t>(v >> 16),
               static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v)};
    return to_hex(b);
  };
  return {std::to_string(zt::kBorn2000),
          "2000-01-01",
          bw(zt::kBorn2000),
          circuit::field_hex(bn254::Fr::from_u64(zt::kBorn2000)),
          salt.hex(),
          circuit::field_hex(circuit::salt_to_field(salt)),
          circuit::salt_to_field(salt).to_decimal()};
}

TEST_F(ServiceTest, HttpFlowAndWitnessConfinement) {
  ApiServer api({"127.0.0.1", true, false, 1}, svc_.get(), nullptr);
  Traffic traffic;
  api.set_observer([&](const auto& q, const auto& r) { traffic.add(q, r); });
  int port = api.start(0);
  httplib::Client cl("127.0.0.1", port);

  auto hz = cl.Get("/v1/healthz");
  ASSERT_TRUE(hz);
  EXPECT_EQ(hz->status, 200);
  EXPECT_EQ(json::parse(hz->body)["poll_interval_s"], 1);

  auto g = cl.Post("/v1/grant", R"({"service":"tradebase","duration_s":3600})", "application/json");
  ASSERT_TRUE(g);
  ASSERT_EQ(g->status, 200) << g->body;
  auto gj = json::parse(g->body);
  EXPECT_EQ(gj["status"], "active");
  EXPECT_EQ(gj["receipt"]["gas_used"], 250000);

  auto s = cl.Get("/v1/status?service=tradebase");
  EXPECT_EQ(json::parse(s->body)["status"], "active");
  auto s2 = cl.Get("/v1/status?service=tradebase&subject=" + kUser.hex());
  EXPECT_EQ(json::parse(s2->body)["status"], "active");

  auto adv = cl.Post("/v1/admin/advance_time", R"({"seconds":3600})", "application/json");
  EXPECT_EQ(adv->status, 200);
  EXPECT_EQ(json::parse(cl.Get("/v1/status?service=tradebase")->body)["status"], "expired");

  EXPECT_EQ(cl.Post("/v1/revoke", R"({"service":"tradebase"})", "application/json")->status, 200);
  auto none = json::parse(cl.Get("/v1/status?service=tradebase")->body);
  EXPECT_EQ(none["status"], "none");
  EXPECT_TRUE(none["expires_at"].is_null());

  auto again = cl.Post("/v1/revoke", R"({"service":"tradebase"})", "application/json");
  EXPECT_EQ(again->status, 409);
  EXPECT_EQ(json::parse(again->body)["error"]["reason"], "NoActiveRecord");

  auto gas = json::parse(cl.Get("/v1/gas?network=l2")->body);
  EXPECT_EQ(gas["grant_cost_usd"], "0.0950");
  EXPECT_EQ(cl.Get("/v1/gas?network=mars")->status, 404);
  EXPECT_EQ(cl.Post("/v1/grant", R"({"service":"x","duration_s":0})", "application/json")->status, 400);
  EXPECT_EQ(cl.Post("/v1/grant", "{not json", "application/json")->status, 400);
  EXPECT_EQ(cl.Get("/v1/status")->status, 400);
  api.stop();

  ASSERT_FALSE(traffic.all.empty());
  for (const auto& needle : secret_needles()) {
    EXPECT_EQ(traffic.all.find(needle), std::string::npos) << needle;
  }
}

TEST_F(ServiceTest, UnderageOverHttpIs422) {
  zt::write_fixed_vault(dir_ / "minor.json", kUser, "birthdate", vault::parse_date("2010-06-01"), fixed_salt());
  ServiceConfig c = cfg_;
  c.vault_path = dir_ / "minor.json";
  LifecycleService minor(c, chain_);
  ApiServer api({"127.0.0.1", false, false, 1}, &minor, nullptr);
  int port = api.start(0);
  httplib::Client cl("127.0.0.1", port);
  auto r = cl.Post("/v1/grant", R"({"service":"tradebase"})", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 422);
  EXPECT_EQ(json::parse(r->body)["error"]["code"], "UnsatisfiedWitness");
  // admin routes are off
  EXPECT_EQ(cl.Post("/v1/admin/advance_time", R"({"seconds":1})", "application/json")->status, 404);
}

TEST_F(ServiceTest, RemoteChainEndpoint) {
  ApiServer hub({"127.0.0.1", true, true, 1}, nullptr, chain_);
  int port = hub.start(0);
  ServiceConfig c = cfg_;
  c.chain = "http://127.0.0.1:" + std::to_string(port);
  auto remote = open_endpoint(c.chain, c.operator_address);
  LifecycleService agent(c, remote);
  EXPECT_EQ(agent.grant("tradebase").status, contracts::AccessState::kActive);
  // the hosting chain sees the same record
  EXPECT_EQ(svc_->status(kUser, "tradebase").status, contracts::AccessState::kActive);
  EXPECT_EQ(remote->info().height, chain_->info().height);
  EXPECT_EQ(remote->schedule(), chain_->schedule());
  EXPECT_EQ(remote->snapshot_text(), chain_->snapshot_text());
  agent.advance_time(86400);
  EXPECT_EQ(agent.status(kUser, "tradebase").status, contracts::AccessState::kExpired);
  agent.revoke("tradebase");
  std::string reason;
  EXPECT_EQ(code_of([&] { agent.revoke("tradebase"); }, &reason), ErrorCode::kReverted);
  EXPECT_EQ(reason, "NoActiveRecord");
  EXPECT_EQ(code_of([&] { remote->advance_time(0); }), ErrorCode::kNonPositiveDelta);
  hub.stop();
  EXPECT_EQ(code_of([&] { remote->info(); }), ErrorCode::kChainUnavailable);
}

TEST_F(ServiceTest, FileChainEndpointSharedAcrossClients) {
  auto path = dir_ / "chain.json";
  FileEndpoint::create(path, cfg_.operator_address);
  EXPECT_EQ(code_of([&] { FileEndpoint::create(path, cfg_.operator_address); }), ErrorCode::kPathExists);
  ServiceConfig c = cfg_;
  c.chain = "file:" + path.string();
  c.keys_dir = dir_ / "fkeys";
  auto a = open_endpoint(c.chain, c.operator_address);
  provision(c, *a, test_seed());
  LifecycleService one(c, a);
  LifecycleService two(c, open_endpoint(c.chain, c.operator_address));
  one.grant("tradebase");
  EXPECT_EQ(two.status(kUser, "tradebase").status, contracts::AccessState::kActive);
  two.revoke("tradebase");
  EXPECT_EQ(one.status(kUser, "tradebase").status, contracts::AccessState::kNone);
  EXPECT_EQ(code_of([&] { FileEndpoint(dir_ / "absent.json"); }), ErrorCode::kChainUnavailable);
}

}  // namespace
