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

#ifndef ZKC_SERVICE_ENDPOINT_HPP_
#define ZKC_SERVICE_ENDPOINT_HPP_

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>

#include "httplib.h"
#include "json.hpp"
#include "zkc/contracts/compliance.hpp"
#include "zkc/ledger/chain.hpp"
#include "zkc/ledger/shared_chain.hpp"
#include "zkc/service/wire.hpp"

namespace zkc::service {

struct ChainInfo {
  std::uint64_t height = 0;
  std::uint64_t clock = 0;
  std::uint64_t cumulative_gas = 0;
};

// What the lifecycle service needs from a chain, wherever it runs.
class ChainEndpoint {
 public:
  virtual ~ChainEndpoint() = default;
  virtual ChainInfo info() = 0;
  virtual std::uint64_t next_nonce(const Address& sender) = 0;
  // With `auto_nonce` the endpoint assigns the sender's next nonce atomically.
  virtual ledger::GasReceipt submit(const ledger::Transaction& tx, bool auto_nonce) = 0;
  virtual contracts::AccessStatus check_access(const Address& subject, const bn254::Fr& service) = 0;
  virtual std::optional<contracts::PredicateInfo> predicate(const std::string& id) = 0;
  virtual std::uint64_t advance_time(std::int64_t delta) = 0;
  virtual ledger::GasSchedule schedule() = 0;
  virtual std::string snapshot_text() = 0;
};

class LocalEndpoint final : public ChainEndpoint {
 public:
  explicit LocalEndpoint(std::shared_ptr<ledger::SharedChain> chain) : chain_(std::move(chain)) {}

  ChainInfo info() override {
    return chain_->read([](const ledger::Chain& c) { return ChainInfo{c.height(), c.clock(), c.cumulative_gas()}; });
  }
  std::uint64_t next_nonce(const Address& sender) override {
    return chain_->read([&](const ledger::Chain& c) { return c.next_nonce(sender); });
  }
  ledger::GasReceipt submit(const ledger::Transaction& tx, bool auto_nonce) override {
    return chain_->write([&](ledger::Chain& c) {
      ledger::Transaction t = tx;
      if (auto_nonce) t.nonce = c.next_nonce(t.sender);
      return c.submit_tx(t);
    });
  }
  contracts::AccessStatus check_access(const Address& subject, const bn254::Fr& service) override {
    return chain_->read([&](const ledger::Chain& c) { return contracts::query_access(c, subject, service); });
  }
  std::optional<contracts::PredicateInfo> predicate(const std::string& id) override {
    return chain_->read([&](const ledger::Chain& c) { return contracts::query_predicate(c, id); });
  }
  std::uint64_t advance_time(std::int64_t delta) override { return chain_->advance_time(delta); }
  ledger::GasSchedule schedule() override {
    return chain_->read([](const ledger::Chain& c) { return c.schedule(); });
  }
  std::string snapshot_text() override {
    return chain_->read([](const ledger::Chain& c) { return c.snapshot_text(); });
  }

  const std::shared_ptr<ledger::SharedChain>& chain() const { return chain_; }

 private:
  std::shared_ptr<ledger::SharedChain> chain_;
};

// Chain persisted as a snapshot document; every call is a locked
// load / execute / store cycle, so separate processes share one chain.
class FileEndpoint final : public ChainEndpoint {
 private:
  class Lock {
   public:
    Lock(const std::filesystem::path& p, bool exclusive) {
      fd_ = ::open((p.string() + ".lock").c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0600);
      if (fd_ < 0 || ::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
        if (fd_ >= 0) ::close(fd_);
        throw Error(ErrorCode::kChainUnavailable, "cannot lock " + p.string());
      }
    }
    ~Lock() {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
    Lock(const Lock&) = delete;
    Lock& operator=(const Lock&) = delete;

   private:
    int fd_ = -1;
  };

  static ledger::Chain load(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorCode::kChainUnavailable, "cannot read " + p.string());
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kMalformedSnapshot, e.what());
    }
    return contracts::load_compliance_chain(j);
  }

  static void store(const std::filesystem::path& p, const ledger::Chain& c) {
    const std::filesystem::path tmp = p.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << c.snapshot_text();
      if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, p, ec);
    if (ec) throw Error(ErrorCode::kIoFailure, ec.message());
  }

  template <class F>
  auto with_chain(bool mutate, F&& f) {
    Lock lock(path_, mutate);
    ledger::Chain c = load(path_);
    if constexpr (std::is_void_v<decltype(f(c))>) {
      f(c);
      if (mutate) store(path_, c);
    } else {
      auto out = f(c);
      if (mutate) store(path_, c);
      return out;
    }
  }

  std::filesystem::path path_;

 public:
  explicit FileEndpoint(std::filesystem::path path) : path_(std::move(path)) {
    std::error_code ec;
    if (!std::filesystem::exists(path_, ec)) throw Error(ErrorCode::kChainUnavailable, "no chain at " + path_.string());
  }

  static std::unique_ptr<FileEndpoint> create(const std::filesystem::path& path, const Address& admin,
                                              ledger::Genesis genesis = {}) {
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) throw Error(ErrorCode::kPathExists, path.string());
    store(path, contracts::make_compliance_chain(admin, std::move(genesis)));
    return std::make_unique<FileEndpoint>(path);
  }

  ChainInfo info() override {
    return with_chain(false, [](ledger::Chain& c) { return ChainInfo{c.height(), c.clock(), c.cumulative_gas()}; });
  }
  std::uint64_t next_nonce(const Address& sender) override {
    return with_chain(false, [&](ledger::Chain& c) { return c.next_nonce(sender); });
  }
  ledger::GasReceipt submit(const ledger::Transaction& tx, bool auto_nonce) override {
    return with_chain(true, [&](ledger::Chain& c) {
      ledger::Transaction t = tx;
      if (auto_nonce) t.nonce = c.next_nonce(t.sender);
      return c.submit_tx(t);
    });
  }
  contracts::AccessStatus check_access(const Address& subject, const bn254::Fr& service) override {
    return with_chain(false, [&](ledger::Chain& c) { return contracts::query_access(c, subject, service); });
  }
  std::optional<contracts::PredicateInfo> predicate(const std::string& id) override {
    return with_chain(false, [&](ledger::Chain& c) { return contracts::query_predicate(c, id); });
  }
  std::uint64_t advance_time(std::int64_t delta) override {
    return with_chain(true, [&](ledger::Chain& c) { return c.advance_time(delta); });
  }
  ledger::GasSchedule schedule() override {
    return with_chain(false, [](ledger::Chain& c) { return c.schedule(); });
  }
  std::string snapshot_text() override {
    return with_chain(false, [](ledger::Chain& c) { return c.snapshot_text(); });
  }
};

// Client for a chain-role server's /v1/chain routes.
class RemoteEndpoint final : public ChainEndpoint {
 public:
  explicit RemoteEndpoint(const std::string& base_url) : client_(base_url) {
    client_.set_connection_timeout(5);
    client_.set_read_timeout(30);
  }

  ChainInfo info() override {
    json j = get("/v1/chain/info", {});
    return {j.at("height").get<std::uint64_t>(), j.at("clock").get<std::uint64_t>(),
            j.at("cumulative_gas").get<std::uint64_t>()};
  }
  std::uint64_t next_nonce(const Address& sender) override {
    return get("/v1/chain/nonce", {{"sender", sender.hex()}}).at("nonce").get<std::uint64_t>();
  }
  ledger::GasReceipt submit(const ledger::Transaction& tx, bool auto_nonce) override {
    return receipt_from_json(post("/v1/chain/submit", tx_to_json(tx, !auto_nonce)));
  }
  contracts::AccessStatus check_access(const Address& subject, const bn254::Fr& service) override {
    return access_from_json(
        get("/v1/chain/access", {{"subject", subject.hex()}, {"service_id", circuit::field_hex(service)}}));
  }
  std::optional<contracts::PredicateInfo> predicate(const std::string& id) override {
    json j = get("/v1/chain/predicate", {{"id", id}});
    if (j.is_null() || !j.contains("id")) return std::nullopt;
    return predicate_from_json(j);
  }
  std::uint64_t advance_time(std::int64_t delta) override {
    return post("/v1/chain/advance_time", {{"seconds", delta}}).at("clock").get<std::uint64_t>();
  }
  ledger::GasSchedule schedule() override { return ledger::GasSchedule::from_json(get("/v1/chain/schedule", {})); }
  std::string snapshot_text() override { return get("/v1/chain/snapshot", {}).dump(1) + "\n"; }

 private:
  json handle(const httplib::Result& res) {
    if (!res) throw Error(ErrorCode::kChainUnavailable, httplib::to_string(res.error()));
    json j;
    try {
      j = json::parse(res->body);
    } catch (const json::exception&) {
      throw Error(ErrorCode::kChainUnavailable, "bad response body");
    }
    if (res->status != 200) {
      const auto& e = j.at("error");
      const std::string code = e.value("code", "");
      const std::string msg = e.value("message", "");
      for (int c = 0; c <= static_cast<int>(ErrorCode::kInvalidArgument); ++c) {
        auto ec = static_cast<ErrorCode>(c);
        if (to_string(ec) == code) {
          if (ec == ErrorCode::kReverted) throw Error::reverted(e.value("reason", ""));
          throw Error(ec, msg);
        }
      }
      throw Error(ErrorCode::kChainUnavailable, msg);
    }
    return j;
  }
  json get(const std::string& path, const httplib::Params& params) {
    std::lock_guard lock(mu_);
    return handle(client_.Get(path, params, httplib::Headers{}));
  }
  json post(const std::string& path, const json& body) {
    std::lock_guard lock(mu_);
    return handle(client_.Post(path, body.dump(), "application/json"));
  }

  std::mutex mu_;
  httplib::Client client_;
};

}  // namespace zkc::service

#endif  // ZKC_SERVICE_ENDPOINT_HPP_
