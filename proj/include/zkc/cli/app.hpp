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

#ifndef ZKC_CLI_APP_HPP_
#define ZKC_CLI_APP_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zkc/circuit/age_circuit.hpp"
#include "zkc/economics/cost.hpp"
#include "zkc/proving/backend.hpp"
#include "zkc/service/endpoint.hpp"
#include "zkc/service/http_api.hpp"
#include "zkc/service/lifecycle.hpp"
#include "zkc/vault/calendar.hpp"
#include "zkc/vault/vault.hpp"

// The zkc command-line driver. Exit codes: 0 success, 1 domain error (the
// reason is printed), 2 usage error.
namespace zkc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

enum class Format { kPlain, kStructured };

// Writes one logical result either as prose or key=value lines.
class Emitter {
 public:
  Emitter(std::ostream& out, Format f) : out_(out), format_(f) {}
  Format format() const { return format_; }

  void emit(const std::string& plain, const std::vector<std::pair<std::string, std::string>>& kv) {
    if (format_ == Format::kPlain) {
      out_ << plain << "\n";
      return;
    }
    for (const auto& [k, v] : kv) out_ << k << "=" << v << "\n";
  }
  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  Format format_;
};

struct Home {
  std::filesystem::path dir;
  std::filesystem::path config() const { return dir / "config.json"; }
  std::filesystem::path vault() const { return dir / "vault.json"; }
  std::filesystem::path chain() const { return dir / "chain.json"; }
  std::filesystem::path keys() const { return dir / "keys"; }

  static std::filesystem::path default_dir() {
    if (const char* z = std::getenv("ZKC_HOME"); z && *z) return z;
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".zkc";
    return ".zkc";
  }

  service::ServiceConfig load_config() const {
    service::ServiceConfig cfg;
    std::ifstream in(config());
    if (in) {
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kInvalidArgument, std::string("config.json: ") + e.what());
      }
      cfg = service::ServiceConfig::from_json(j);
    }
    if (cfg.vault_path.empty()) cfg.vault_path = vault();
    if (cfg.keys_dir.empty()) cfg.keys_dir = keys();
    if (cfg.chain == "local") cfg.chain = "file:" + chain().string();
    return cfg;
  }

  void save_config(const service::ServiceConfig& cfg) const {
    std::filesystem::create_directories(dir);
    std::ofstream out(config(), std::ios::trunc);
    out << cfg.to_json().dump(2) << "\n";
    if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + config().string());
  }
};

inline std::string status_line(const service::SessionView& v) {
  std::string s = "status " + std::string(contracts::access_state_name(v.status)) + " service " + v.service +
                  " subject " + v.subject.hex();
  if (v.expires_at) s += " expires_at " + std::to_string(*v.expires_at);
  return s;
}

inline std::vector<std::pair<std::string, std::string>> session_kv(const service::SessionView& v) {
  std::vector<std::pair<std::string, std::string>> kv = {
      {"status", std::string(contracts::access_state_name(v.status))},
      {"service", v.service},
      {"service_id", circuit::field_hex(v.service_id)},
      {"subject", v.subject.hex()},
      {"last_checked", std::to_string(v.last_checked)}};
  if (v.granted_at) kv.emplace_back("granted_at", std::to_string(*v.granted_at));
  if (v.expires_at) kv.emplace_back("expires_at", std::to_string(*v.expires_at));
  if (v.receipt) {
    kv.emplace_back("tx_height", std::to_string(v.receipt->height));
    kv.emplace_back("gas_used", std::to_string(v.receipt->gas_used));
  }
  return kv;
}

inline std::string cpu_model() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) == 0) {
      auto pos = line.find(':');
      if (pos != std::string::npos) return line.substr(pos + 2);
    }
  }
  return "unknown";
}

struct BenchResult {
  std::vector<double> samples_ms;
  double p50 = 0, p95 = 0, mean = 0;
};

inline double percentile(std::vector<double> v, double q) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  // nearest-rank
  std::size_t rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size())));
  rank = std::clamp<std::size_t>(rank, 1, v.size());
  return v[rank - 1];
}

// Median of an even count is the mean of the two middle samples.
inline double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

inline BenchResult bench_prove(proving::BackendId backend, int iters, int warmup = 2) {
  auto cs = circuit::build_age_circuit();
  auto kp = proving::setup(cs, backend, Seed{});
  auto rec = vault::make_record("birthdate", vault::date_to_days(2000, 1, 1), vault::sample_salt());
  circuit::Statement st{rec.commitment, circuit::kAdultThresholdDays, vault::date_to_days(2024, 6, 1),
                        address_from_u64(1), circuit::service_id_from_name("tradebase"),
                        ledger::kDefaultGenesisClock + 86400};
  for (int i = 0; i < warmup; ++i) proving::prove(kp.pk, st, rec.witness());
  BenchResult r;
  for (int i = 0; i < iters; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    auto p = proving::prove(kp.pk, st, rec.witness());
    auto t1 = std::chrono::steady_clock::now();
    r.samples_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (p.bytes.empty()) throw Error(ErrorCode::kMalformedProof);
  }
  r.p50 = median(r.samples_ms);
  r.p95 = percentile(r.samples_ms, 0.95);
  double sum = 0;
  for (double s : r.samples_ms) sum += s;
  r.mean = r.samples_ms.empty() ? 0 : sum / static_cast<double>(r.samples_ms.size());
  return r;
}

inline std::string fmt_ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zkc: selective-disclosure age verification with revocable on-chain sessions", "zkc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string home_dir = Home::default_dir().string();
  std::string format = "plain";
  app.add_option("--home", home_dir, "state directory (env ZKC_HOME)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "structured"}));

  // vault
  auto* vault_cmd = app.add_subcommand("vault", "manage the local attribute vault");
  vault_cmd->require_subcommand(1);
  auto* vinit = vault_cmd->add_subcommand("init", "create an empty vault");
  std::string owner_hex;
  bool force = false;
  vinit->add_option("--owner", owner_hex, "owner account, 20-byte hex")->required();
  vinit->add_flag("--force", force, "overwrite an existing vault");
  auto* vadd = vault_cmd->add_subcommand("add", "add an attribute");
  std::string attr_name = "birthdate";
  std::optional<std::int64_t> attr_value;
  std::string attr_date;
  vadd->add_option("--name", attr_name, "attribute name");
  auto* value_opt = vadd->add_option("--value", attr_value, "integer value in [0, 2^32)");
  vadd->add_option("--date", attr_date, "birthdate as YYYY-MM-DD")->excludes(value_opt);
  auto* vshow = vault_cmd->add_subcommand("show", "print vault records");
  std::string show_name;
  vshow->add_option("--name", show_name, "only this attribute");

  // setup
  auto* setup_cmd = app.add_subcommand("setup", "generate keys and register the predicate on chain");
  std::string backend_name = "simulated";
  std::string seed_hex;
  std::uint32_t threshold = circuit::kAdultThresholdDays;
  bool unbound = false;
  std::string predicate_id(contracts::kDefaultPredicateId);
  setup_cmd->add_option("--backend", backend_name, "simulated or snark")->check(CLI::IsMember({"simulated", "snark"}));
  setup_cmd->add_option("--seed", seed_hex, "32-byte hex seed for reproducible keys");
  setup_cmd->add_option("--threshold", threshold, "threshold in days");
  setup_cmd->add_flag("--unbound", unbound, "no subject binding (replayable proofs)");
  setup_cmd->add_option("--predicate", predicate_id, "predicate id");

  // flows
  std::string svc_name;
  std::string subject_hex;
  std::optional<std::int64_t> duration;
  std::string attribute = "birthdate";
  auto* grant_cmd = app.add_subcommand("grant", "prove locally and open a session");
  grant_cmd->add_option("--service", svc_name, "service name")->required();
  grant_cmd->add_option("--attribute", attribute, "vault attribute");
  grant_cmd->add_option("--duration", duration, "session length in seconds");
  grant_cmd->add_option("--predicate", predicate_id, "predicate id");
  auto* status_cmd = app.add_subcommand("status", "query the access registry");
  status_cmd->add_option("--service", svc_name, "service name")->required();
  status_cmd->add_option("--subject", subject_hex, "account to check (default: vault owner)");
  auto* revoke_cmd = app.add_subcommand("revoke", "delete your session record on chain");
  revoke_cmd->add_option("--service", svc_name, "service name")->required();
  auto* adv_cmd = app.add_subcommand("advance-time", "advance the simulated chain clock");
  std::int64_t seconds = 0;
  adv_cmd->add_option("--seconds", seconds, "delta in seconds")->required();

  // economics
  auto* gas_cmd = app.add_subcommand("gas-report", "gas and fiat cost per operation");
  std::string network = "mainnet";
  std::string presets_path;
  gas_cmd->add_option("--network", network, "preset name");
  gas_cmd->add_option("--presets", presets_path, "preset override file");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "benchmarks");
  bench_cmd->require_subcommand(1);
  auto* bprove = bench_cmd->add_subcommand("prove", "proving latency for the age circuit");
  std::string bench_backend = "snark";
  int iters = 50;
  bprove->add_option("--backend", bench_backend, "simulated or snark")->check(CLI::IsMember({"simulated", "snark"}));
  bprove->add_option("--iters", iters, "timed iterations")->check(CLI::Range(1, 100000));

  // chain
  auto* chain_cmd = app.add_subcommand("chain", "inspect the simulated chain");
  chain_cmd->require_subcommand(1);
  auto* chain_export = chain_cmd->add_subcommand("export", "print the chain snapshot");

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "run the local HTTP API");
  int port = -1;
  bool admin = false;
  std::string role = "all";
  std::string chain_url;
  serve_cmd->add_option("--port", port, "listen port (default from config)");
  serve_cmd->add_flag("--admin", admin, "enable /v1/admin/advance_time");
  serve_cmd->add_option("--role", role, "all, chain or agent")->check(CLI::IsMember({"all", "chain", "agent"}));
  serve_cmd->add_option("--chain-url", chain_url, "chain server for --role agent");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    // help text of the innermost subcommand that was reached
    const CLI::App* sub = &app;
    for (;;) {
      auto subs = sub->get_subcommands();
      if (subs.empty()) break;
      sub = subs.front();
    }
    err << sub->help();
    return kExitUsage;
  }

  Emitter em(out, format == "structured" ? Format::kStructured : Format::kPlain);
  Home home{home_dir};

  try {
    if (vinit->parsed()) {
      Address owner = service::parse_address(owner_hex);
      std::filesystem::create_directories(home.dir);
      vault::Vault::init(home.vault(), owner, force);
      if (!std::filesystem::exists(home.config())) home.save_config(home.load_config());
      em.emit("vault created at " + home.vault().string() + " owner " + owner.hex(),
              {{"vault", home.vault().string()}, {"owner", owner.hex()}, {"records", "0"}});
      return kExitOk;
    }
    if (vadd->parsed()) {
      std::int64_t value;
      if (!attr_date.empty()) {
        value = vault::parse_date(attr_date);
      } else if (attr_value) {
        value = *attr_value;
      } else {
        throw CLI::RequiredError("--value or --date");
      }
      auto v = vault::Vault::open(home.vault(), true);
      const auto& rec = v.add_attribute(attr_name, value);
      em.emit("added " + rec.name + " commitment " + circuit::field_hex(rec.commitment),
              {{"name", rec.name}, {"commitment", circuit::field_hex(rec.commitment)}});
      return kExitOk;
    }
    if (vshow->parsed()) {
      auto v = vault::Vault::open(home.vault(), false);
      em.emit("owner " + v.owner().hex(), {{"owner", v.owner().hex()}});
      for (const auto& [name, rec] : v.records()) {
        if (!show_name.empty() && name != show_name) continue;
        em.emit(name + " value " + std::to_string(rec.value) + " (" + vault::format_date(rec.value) + ") commitment " +
                    circuit::field_hex(rec.commitment),
                {{"record." + name + ".value", std::to_string(rec.value)},
                 {"record." + name + ".commitment", circuit::field_hex(rec.commitment)}});
      }
      if (!show_name.empty()) v.get_record(show_name);
      return kExitOk;
    }
    if (setup_cmd->parsed()) {
      auto cfg = home.load_config();
      cfg.backend = proving::parse_backend(backend_name);
      service::PredicateConfig pc{predicate_id, threshold,
                                  unbound ? contracts::BindingMode::kUnbound : contracts::BindingMode::kBound};
      bool replaced = false;
      for (auto& p : cfg.predicates) {
        if (p.id == pc.id) {
          p = pc;
          replaced = true;
        }
      }
      if (!replaced) cfg.predicates.push_back(pc);
      std::optional<Seed> seed;
      if (!seed_hex.empty()) {
        Bytes raw;
        if (!from_hex(seed_hex, raw) || raw.size() != 32) throw CLI::ValidationError("--seed", "expected 32-byte hex");
        Seed s;
        std::copy(raw.begin(), raw.end(), s.begin());
        seed = s;
      }
      if (cfg.chain.starts_with("file:") && !std::filesystem::exists(cfg.chain.substr(5))) {
        service::FileEndpoint::create(cfg.chain.substr(5), cfg.operator_address);
      }
      home.save_config(cfg);
      auto chain = service::open_endpoint(cfg.chain, cfg.operator_address);
      service::ServiceConfig one = cfg;
      one.predicates = {pc};
      auto made = service::provision(one, *chain, seed);
      const bool fresh = made.count(pc.id) > 0;
      em.emit(std::string(fresh ? "registered " : "already registered ") + pc.id + " threshold " +
                  std::to_string(pc.threshold_days) + " mode " + std::string(contracts::binding_mode_name(pc.mode)) +
                  " backend " + std::string(proving::backend_name(cfg.backend)) + " (" +
                  std::string(proving::kSetupNotice) + ")",
              {{"predicate", pc.id},
               {"registered", fresh ? "true" : "false"},
               {"threshold_days", std::to_string(pc.threshold_days)},
               {"mode", std::string(contracts::binding_mode_name(pc.mode))},
               {"backend", std::string(proving::backend_name(cfg.backend))},
               {"keys", cfg.keys_dir.string()}});
      return kExitOk;
    }
    if (gas_cmd->parsed()) {
      auto cfg = home.load_config();
      auto presets = economics::load_presets(presets_path.empty() ? cfg.presets_path : std::filesystem::path(presets_path));
      const auto& params = economics::find_preset(presets, network);
      ledger::GasSchedule schedule = ledger::GasSchedule::defaults();
      if (cfg.chain.starts_with("file:") && std::filesystem::exists(cfg.chain.substr(5))) {
        schedule = service::open_endpoint(cfg.chain, cfg.operator_address)->schedule();
      }
      auto r = service::gas_report(schedule, params);
      if (em.format() == Format::kPlain) {
        out << "network " << params.name << " gas_price " << params.gas_price_gwei.to_string() << " gwei token $"
            << params.token_usd.to_string() << " overhead $" << params.overhead_usd.to_string() << "\n";
        out << "grant " << r.grant_gas << " gas $" << r.grant_cost.usd_string() << "\n";
        out << "revoke " << r.revoke_gas << " gas $" << r.revoke_cost.usd_string() << "\n";
      } else {
        em.emit("", {{"network", params.name},
                     {"grant_gas", std::to_string(r.grant_gas)},
                     {"grant_cost_usd", r.grant_cost.usd_string()},
                     {"revoke_gas", std::to_string(r.revoke_gas)},
                     {"revoke_cost_usd", r.revoke_cost.usd_string()}});
      }
      return kExitOk;
    }
    if (bprove->parsed()) {
      auto backend = proving::parse_backend(bench_backend);
      auto r = bench_prove(backend, iters);
      const double target = backend == proving::BackendId::kSnark ? 200.0 : 5.0;
      const bool within = r.p50 < target;
      const std::string cpu = cpu_model();
      const unsigned cores = std::thread::hardware_concurrency();
      if (em.format() == Format::kPlain) {
        out << "bench prove backend " << bench_backend << " iters " << iters << "\n";
        out << "p50 " << fmt_ms(r.p50) << " ms\n";
        out << "p95 " << fmt_ms(r.p95) << " ms\n";
        out << "mean " << fmt_ms(r.mean) << " ms\n";
        out << "median " << (within ? "<" : ">=") << " " << target << " ms target: " << (within ? "yes" : "no") << "\n";
        out << "machine " << cpu << ", " << cores << " logical cores\n";
        out << "note: the latency target is a hardware-dependent bound, checked as bound satisfaction, not point"
               " reproduction\n";
      } else {
        em.emit("", {{"backend", bench_backend},
                     {"iters", std::to_string(iters)},
                     {"p50_ms", fmt_ms(r.p50)},
                     {"p95_ms", fmt_ms(r.p95)},
                     {"mean_ms", fmt_ms(r.mean)},
                     {"target_ms", fmt_ms(target)},
                     {"within_target", within ? "true" : "false"},
                     {"cpu", cpu},
                     {"cores", std::to_string(cores)},
                     {"comparison", "bound-satisfaction"}});
      }
      return kExitOk;
    }

    auto cfg = home.load_config();
    if (serve_cmd->parsed()) {
      if (port >= 0) cfg.port = static_cast<std::uint16_t>(port);
      cfg.admin_api = cfg.admin_api || admin;
      std::shared_ptr<service::ChainEndpoint> hosted;
      std::shared_ptr<service::ChainEndpoint> agent_chain;
      if (role == "agent") {
        if (chain_url.empty()) throw CLI::RequiredError("--chain-url");
        agent_chain = std::make_shared<service::RemoteEndpoint>(chain_url);
      } else {
        hosted = service::open_endpoint(cfg.chain, cfg.operator_address);
        agent_chain = hosted;
      }
      std::unique_ptr<service::LifecycleService> agent;
      if (role != "chain") agent = std::make_unique<service::LifecycleService>(cfg, agent_chain);
      service::ApiServer server({"127.0.0.1", cfg.admin_api, role != "agent", cfg.poll_interval_s}, agent.get(), hosted);
      err << "serving role " << role << " on 127.0.0.1:" << cfg.port << "\n";
      server.serve(cfg.port);
      return kExitOk;
    }
    if (chain_export->parsed()) {
      out << service::open_endpoint(cfg.chain, cfg.operator_address)->snapshot_text();
      return kExitOk;
    }

    service::LifecycleService svc(cfg, service::open_endpoint(cfg.chain, cfg.operator_address));
    if (grant_cmd->parsed()) {
      auto v = svc.grant(svc_name, attribute, duration, predicate_id);
      em.emit("granted: " + status_line(v) + " gas " + std::to_string(v.receipt->gas_used), session_kv(v));
      return kExitOk;
    }
    if (status_cmd->parsed()) {
      Address subject = subject_hex.empty() ? svc.owner() : service::parse_address(subject_hex);
      auto v = svc.status(subject, svc_name);
      em.emit(status_line(v), session_kv(v));
      return kExitOk;
    }
    if (revoke_cmd->parsed()) {
      auto r = svc.revoke(svc_name);
      em.emit("revoked service " + svc_name + " gas " + std::to_string(r.gas_used),
              {{"revoked", svc_name}, {"tx_height", std::to_string(r.height)}, {"gas_used", std::to_string(r.gas_used)}});
      return kExitOk;
    }
    if (adv_cmd->parsed()) {
      auto clock = svc.advance_time(seconds);
      em.emit("clock " + std::to_string(clock), {{"clock", std::to_string(clock)}});
      return kExitOk;
    }
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (em.format() == Format::kStructured) {
      out << "error=" << e.reason() << "\n";
    }
    err << "error: " << e.reason();
    if (std::string(e.what()) != e.reason()) err << " (" << e.what() << ")";
    err << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: IoFailure (" << e.what() << ")\n";
    return kExitDomain;
  }
  err << app.help();
  return kExitUsage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace zkc::cli

#endif  // ZKC_CLI_APP_HPP_
