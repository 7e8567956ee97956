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

#ifndef ZKC_LEDGER_SHARED_CHAIN_HPP_
#define ZKC_LEDGER_SHARED_CHAIN_HPP_

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "zkc/ledger/chain.hpp"

namespace zkc::ledger {

// Chain behind a reader/writer lock. Mutations are serialized in lock-grant
// order; reads run concurrently against a consistent state.
class SharedChain {
 public:
  explicit SharedChain(Chain chain) : chain_(std::move(chain)) {}

  GasReceipt submit_tx(const Transaction& tx) {
    std::unique_lock lock(mu_);
    return chain_.submit_tx(tx);
  }
  std::uint64_t advance_time(std::int64_t delta) {
    std::unique_lock lock(mu_);
    return chain_.advance_time(delta);
  }

  template <class F>
  auto read(F&& f) const {
    std::shared_lock lock(mu_);
    return std::invoke(std::forward<F>(f), static_cast<const Chain&>(chain_));
  }
  template <class F>
  auto write(F&& f) {
    std::unique_lock lock(mu_);
    return std::invoke(std::forward<F>(f), chain_);
  }

 private:
  mutable std::shared_mutex mu_;
  Chain chain_;
};

}  // namespace zkc::ledger

#endif  // ZKC_LEDGER_SHARED_CHAIN_HPP_
