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

#ifndef ZKC_SERVICE_HTTP_API_HPP_
#define ZKC_SERVICE_HTTP_API_HPP_

#include <functional>
#include <memory>
#include <string>
#include <thread>
#include <utility>

#include "httplib.h"
#include "json.hpp"
#include "zkc/service/endpoint.hpp"
#include "zkc/service/lifecycle.hpp"
#include "zkc/service/wire.hpp"

// Loopback HTTP API. JSON request and response bodies; money as decimal
// strings; ids as lowercase hex. Failures answer {"error": {code, reason,
// message}} where reason is the contract revert reason when there is one.
namespace zkc::service {

struct ApiOptions {
  std::string host = "127.0.0.1";
  bool admin_api = false;     // enables /v1/admin/advance_time
  bool expose_chain = false;  // serves /v1/chain/* from the hosted chain
  std::int64_t poll_interval_s = 1;
};

inline int http_status_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidDecimal:
    case ErrorCode::kValueOutOfRange:
    case ErrorCode::kNonPositiveDelta:
    case ErrorCode::kNonPositiveGas:
    case ErrorCode::kBadNonce:
      return 400;
    case ErrorCode::kNotFound:
    case ErrorCode::kUnknownNetwork:
    case ErrorCode::kUnknownContract:
      return 404;
    case ErrorCode::kReverted:
      return 409;
    case ErrorCode::kUnsatisfiedWitness:
      return 422;
    case ErrorCode::kChainUnavailable:
      return 503;
    default:
      return 500;
  }
}

class ApiServer {
 public:
  using Observer = std::function<void(const httplib::Request&, const httplib::Response&)>;

  // `agent` serves the user flows; `chain` (the hosted chain) backs
  // /v1/chain/* and healthz. Either may be null for a single-role server.
  ApiServer(ApiOptions opts, LifecycleService* agent, std::shared_ptr<ChainEndpoint> chain)
      : opts_(std::move(opts)), agent_(agent), chain_(std::move(chain)) {
    if (!chain_ && agent_) chain_view_ = &agent_->chain();
    if (chain_) chain_view_ = chain_.get();
    routes();
    server_.set_logger([this](const httplib::Request& req, const httplib::Response& res) {
      if (observer_) observer_(req, res);
    });
  }

  ~ApiServer() { stop(); }
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Called after every request with the full request and response.
  void set_observer(Observer obs) { observer_ = std::move(obs); }

  // Binds (port 0 picks a free one) and serves on a background thread.
  int start(int port) {
    int bound = port == 0 ? server_.bind_to_any_port(opts_.host) : (server_.bind_to_port(opts_.host, port) ? port : -1);
    if (bound < 0) throw Error(ErrorCode::kIoFailure, "cannot bind " + opts_.host + ":" + std::to_string(port));
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    port_ = bound;
    return bound;
  }

  // Blocks serving on the calling thread.
  void serve(int port) {
    if (!server_.listen(opts_.host, port)) throw Error(ErrorCode::kIoFailure, "cannot listen on port " + std::to_string(port));
  }

  void stop() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  int port() const { return port_; }

 private:
  using Handler = std::function<json(const httplib::Request&)>;

  void route_get(const std::string& path, Handler h) {
    server_.Get(path, [this, h](const httplib::Request& req, httplib::Response& res) { run(h, req, res); });
  }
  void route_post(const std::string& path, Handler h) {
    server_.Post(path, [this, h](const httplib::Request& req, httplib::Response& res) { run(h, req, res); });
  }

  static void run(const Handler& h, const httplib::Request& req, httplib::Response& res) {
    json body;
    try {
      body = h(req);
      res.status = 200;
    } catch (const Error& e) {
      body = error_to_json(e);
      res.status = http_status_for(e);
    } catch (const json::exception& e) {
      body = error_to_json(Error(ErrorCode::kInvalidArgument, e.what()));
      res.status = 400;
    } catch (const std::exception& e) {
      body = error_to_json(Error(ErrorCode::kIoFailure, e.what()));
      res.status = 500;
    }
    res.set_content(body.dump(), "application/json");
  }

  static json body_of(const httplib::Request& req) {
    if (req.body.empty()) return json::object();
    return json::parse(req.body);
  }

  static std::string param(const httplib::Request& req, const std::string& key) {
    if (!req.has_param(key)) throw Error(ErrorCode::kInvalidArgument, "missing parameter " + key);
    return req.get_param_value(key);
  }

  LifecycleService& agent() {
    if (!agent_) throw Error(ErrorCode::kNotFound, "agent routes disabled on this server");
    return *agent_;
  }

  void routes() {
    route_get("/v1/healthz", [this](const httplib::Request&) {
      json j = {{"ok", true}, {"poll_interval_s", opts_.poll_interval_s}, {"admin", opts_.admin_api}};
      if (chain_view_) {
        ChainInfo info = chain_view_->info();
        j["chain_height"] = info.height;
        j["clock"] = info.clock;
      }
      return j;
    });

    route_post("/v1/grant", [this](const httplib::Request& req) {
      json b = body_of(req);
      std::optional<std::int64_t> dur;
      if (b.contains("duration_s")) dur = b.at("duration_s").get<std::int64_t>();
      return agent()
          .grant(b.at("service").get<std::string>(), b.value("attribute", std::string("birthdate")), dur,
                 b.value("predicate", std::string(contracts::kDefaultPredicateId)))
          .to_json();
    });

    route_get("/v1/status", [this](const httplib::Request& req) {
      Address subject = req.has_param("subject") ? parse_address(req.get_param_value("subject")) : agent().owner();
      return agent().status(subject, param(req, "service")).to_json();
    });

    route_post("/v1/revoke", [this](const httplib::Request& req) {
      json b = body_of(req);
      return json{{"receipt", agent().revoke(b.at("service").get<std::string>()).to_json()}};
    });

    route_get("/v1/gas", [this](const httplib::Request& req) {
      std::string net = req.has_param("network") ? req.get_param_value("network") : "mainnet";
      return agent().gas(net).to_json();
    });

    if (opts_.admin_api) {
      route_post("/v1/admin/advance_time", [this](const httplib::Request& req) {
        json b = body_of(req);
        std::int64_t secs = b.at("seconds").get<std::int64_t>();
        std::uint64_t clock = agent_ ? agent_->advance_time(secs) : chain_view_->advance_time(secs);
        return json{{"clock", clock}};
      });
    }

    if (opts_.expose_chain && chain_) chain_routes();
  }

  void chain_routes() {
    ChainEndpoint* c = chain_.get();
    route_get("/v1/chain/info", [c](const httplib::Request&) {
      ChainInfo i = c->info();
      return json{{"height", i.height}, {"clock", i.clock}, {"cumulative_gas", i.cumulative_gas}};
    });
    route_get("/v1/chain/nonce", [c](const httplib::Request& req) {
      return json{{"nonce", c->next_nonce(parse_address(param(req, "sender")))}};
    });
    route_post("/v1/chain/submit", [c](const httplib::Request& req) {
      json b = body_of(req);
      return receipt_to_json(c->submit(tx_from_json(b), !b.contains("nonce")));
    });
    route_get("/v1/chain/access", [c](const httplib::Request& req) {
      return access_to_json(c->check_access(parse_address(param(req, "subject")), parse_field(param(req, "service_id"))));
    });
    route_get("/v1/chain/predicate", [c](const httplib::Request& req) {
      auto p = c->predicate(param(req, "id"));
      return p ? predicate_to_json(*p) : json(nullptr);
    });
    route_get("/v1/chain/schedule", [c](const httplib::Request&) { return c->schedule().to_json(); });
    route_get("/v1/chain/snapshot", [c](const httplib::Request&) { return json::parse(c->snapshot_text()); });
    if (opts_.admin_api) {
      route_post("/v1/chain/advance_time", [c](const httplib::Request& req) {
        return json{{"clock", c->advance_time(body_of(req).at("seconds").get<std::int64_t>())}};
      });
    }
  }

  ApiOptions opts_;
  LifecycleService* agent_;
  std::shared_ptr<ChainEndpoint> chain_;
  ChainEndpoint* chain_view_ = nullptr;
  httplib::Server server_;
  std::thread thread_;
  Observer observer_;
  int port_ = 0;
};

}  // namespace zkc::service

#endif  // ZKC_SERVICE_HTTP_API_HPP_
