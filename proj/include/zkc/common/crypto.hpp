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

#ifndef ZKC_COMMON_CRYPTO_HPP_
#define ZKC_COMMON_CRYPTO_HPP_

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/rand.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>

#include "zkc/common/bytes.hpp"
#include "zkc/common/error.hpp"

namespace zkc {

using Digest = std::array<std::uint8_t, 32>;

inline Digest sha256(ByteView data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIoFailure, "sha256 failed");
  }
  return out;
}

inline Digest hmac_sha256(ByteView key, ByteView data) {
  Digest out{};
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(), data.size(),
           out.data(), &len) == nullptr) {
    throw Error(ErrorCode::kIoFailure, "hmac failed");
  }
  return out;
}

// Constant-time equality for MAC comparison.
inline bool ct_equal(ByteView a, ByteView b) {
  if (a.size() != b.size()) return false;
  std::uint8_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc |= a[i] ^ b[i];
  return acc == 0;
}

// Fills `out` from the operating system CSPRNG.
inline void secure_random(std::span<std::uint8_t> out) {
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error(ErrorCode::kIoFailure, "RAND_bytes failed");
  }
}

using Seed = std::array<std::uint8_t, 32>;

// Byte source used by key generation and proving. Either the OS CSPRNG or a
// deterministic SHA-256 counter-mode stream expanded from a 256-bit seed.
class RandomSource {
 public:
  RandomSource() = default;
  explicit RandomSource(const Seed& seed) : seed_(seed) {}
  static RandomSource from_optional(const std::optional<Seed>& seed) {
    return seed ? RandomSource(*seed) : RandomSource();
  }

  bool deterministic() const { return seed_.has_value(); }

  void fill(std::span<std::uint8_t> out) {
    if (!seed_) {
      secure_random(out);
      return;
    }
    std::size_t pos = 0;
    while (pos < out.size()) {
      if (avail_ == 0) refill();
      std::size_t n = std::min(avail_, out.size() - pos);
      std::memcpy(out.data() + pos, block_.data() + (block_.size() - avail_), n);
      avail_ -= n;
      pos += n;
    }
  }

 private:
  void refill() {
    ByteWriter w;
    w.raw(*seed_);
    w.u64(counter_++);
    block_ = sha256(w.data());
    avail_ = block_.size();
  }

  std::optional<Seed> seed_;
  Digest block_{};
  std::size_t avail_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace zkc

#endif  // ZKC_COMMON_CRYPTO_HPP_
