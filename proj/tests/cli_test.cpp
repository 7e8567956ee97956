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

#include <sstream>

#include "test_support.hpp"
#include "zkc/cli/app.hpp"

namespace {

namespace zt = zkc::testing;

struct Result {
  int code;
  std::string out, err;
};

class CliTest : public ::testing::Test {
 protected:
  Result zkc(std::vector<std::string> args) {
    args.insert(args.begin(), {"--home", dir_.path().string()});
    std::ostringstream out, err;
    int code = zkc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  void init_user() {
    ASSERT_EQ(zkc({"vault", "init", "--owner", zkc::address_from_u64(1).hex()}).code, 0);
    ASSERT_EQ(zkc({"vault", "add", "--name", "birthdate", "--date", "2000-01-01"}).code, 0);
    auto s = zkc({"setup", "--seed", std::string(64, '1')});
    ASSERT_EQ(s.code, 0) << s.err;
  }

  zt::TempDir dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(zkc({}).code, 2);
  EXPECT_EQ(zkc({"frobnicate"}).code, 2);
  auto r = zkc({"grant"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--service"), std::string::npos);
  EXPECT_EQ(zkc({"--help"}).code, 0);
}

TEST_F(CliTest, VaultCommands) {
  EXPECT_EQ(zkc({"vault", "init", "--owner", "nothex"}).code, 1);
  EXPECT_EQ(zkc({"vault", "init", "--owner", zkc::address_from_u64(1).hex()}).code, 0);
  auto again = zkc({"vault", "init", "--owner", zkc::address_from_u64(1).hex()});
  EXPECT_EQ(again.code, 1);
  EXPECT_NE(again.err.find("PathExists"), std::string::npos);
  EXPECT_EQ(zkc({"vault", "add", "--name", "birthdate", "--date", "2023-02-29"}).code, 1);
  EXPECT_EQ(zkc({"vault", "add", "--name", "birthdate", "--date", "2000-01-01"}).code, 0);
  auto dup = zkc({"--format", "structured", "vault", "add", "--name", "birthdate", "--value", "5"});
  EXPECT_EQ(dup.code, 1);
  EXPECT_NE(dup.out.find("error=DuplicateName"), std::string::npos);
  EXPECT_EQ(zkc({"vault", "add", "--name", "big", "--value", "4294967296"}).code, 1);
  auto show = zkc({"vault", "show", "--name", "birthdate"});
  EXPECT_EQ(show.code, 0);
  EXPECT_NE(show.out.find("2000-01-01"), std::string::npos);
  EXPECT_EQ(zkc({"vault", "show", "--name", "nope"}).code, 1);
}

TEST_F(CliTest, FullLifecycle) {
  init_user();
  auto g = zkc({"--format", "structured", "grant", "--service", "tradebase"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_NE(g.out.find("status=active"), std::string::npos);
  EXPECT_NE(g.out.find("gas_used=250000"), std::string::npos);
  EXPECT_NE(zkc({"status", "--service", "tradebase"}).out.find("status active"), std::string::npos);
  EXPECT_EQ(zkc({"advance-time", "--seconds", "86400"}).code, 0);
  EXPECT_NE(zkc({"status", "--service", "tradebase"}).out.find("status expired"), std::string::npos);
  EXPECT_EQ(zkc({"grant", "--service", "tradebase"}).code, 0);
  EXPECT_EQ(zkc({"revoke", "--service", "tradebase"}).code, 0);
  EXPECT_NE(zkc({"status", "--service", "tradebase"}).out.find("status none"), std::string::npos);
  auto twice = zkc({"revoke", "--service", "tradebase"});
  EXPECT_EQ(twice.code, 1);
  EXPECT_NE(twice.err.find("NoActiveRecord"), std::string::npos);
  EXPECT_EQ(zkc({"advance-time", "--seconds", "0"}).code, 1);
  EXPECT_EQ(zkc({"grant", "--service", "tradebase", "--duration", "0"}).code, 1);

  auto exp = zkc({"chain", "export"});
  ASSERT_EQ(exp.code, 0);
  auto j = nlohmann::json::parse(exp.out);
  EXPECT_EQ(j["height"], 5);  // register, grant, grant, revoke, failed revoke
  EXPECT_EQ(exp.out.find("2000-01-01"), std::string::npos);
}

TEST_F(CliTest, SetupIsIdempotentAndUnderageFails) {
  ASSERT_EQ(zkc({"vault", "init", "--owner", zkc::address_from_u64(1).hex()}).code, 0);
  ASSERT_EQ(zkc({"vault", "add", "--name", "birthdate", "--date", "2010-06-01"}).code, 0);
  ASSERT_EQ(zkc({"setup"}).code, 0);
  auto again = zkc({"setup"});
  EXPECT_EQ(again.code, 0);
  EXPECT_NE(again.out.find("already registered"), std::string::npos);
  auto g = zkc({"grant", "--service", "tradebase"});
  EXPECT_EQ(g.code, 1);
  EXPECT_NE(g.err.find("UnsatisfiedWitness"), std::string::npos);
}

TEST_F(CliTest, GasReport) {
  auto r = zkc({"gas-report"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("grant 250000 gas $15.0000"), std::string::npos) << r.out;
  auto l2 = zkc({"--format", "structured", "gas-report", "--network", "l2"});
  EXPECT_NE(l2.out.find("0.0950"), std::string::npos) << l2.out;
  EXPECT_EQ(zkc({"gas-report", "--network", "mars"}).code, 1);
}

TEST_F(CliTest, BenchSimulated) {
  auto r = zkc({"bench", "prove", "--backend", "simulated", "--iters", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("p50 "), std::string::npos);
  EXPECT_NE(r.out.find("p95 "), std::string::npos);
  EXPECT_EQ(zkc({"bench", "prove", "--iters", "0"}).code, 2);
}

}  // namespace
