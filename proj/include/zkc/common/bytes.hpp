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

#ifndef ZKC_COMMON_BYTES_HPP_
#define ZKC_COMMON_BYTES_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zkc {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline std::string to_hex(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

namespace internal {
inline int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace internal

// Accepts an optional 0x prefix. Returns false on odd length or a bad digit.
inline bool from_hex(std::string_view hex, Bytes& out) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.size() % 2 != 0) return false;
  out.clear();
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = internal::hex_digit(hex[i]);
    int lo = internal::hex_digit(hex[i + 1]);
    if (hi < 0 || lo < 0) return false;
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return true;
}

// Fixed-size big-endian byte string with hex I/O; base for id types.
template <std::size_t N, class Tag>
struct FixedBytes {
  std::array<std::uint8_t, N> bytes{};

  static constexpr std::size_t kSize = N;

  static bool parse(std::string_view hex, FixedBytes& out) {
    Bytes raw;
    if (!from_hex(hex, raw) || raw.size() != N) return false;
    std::copy(raw.begin(), raw.end(), out.bytes.begin());
    return true;
  }
  std::string hex() const { return to_hex(bytes); }
  bool is_zero() const {
    for (auto b : bytes)
      if (b != 0) return false;
    return true;
  }
  ByteView view() const { return bytes; }
  friend auto operator<=>(const FixedBytes&, const FixedBytes&) = default;
};

struct AddressTag {};
// 160-bit account identifier.
using Address = FixedBytes<20, AddressTag>;

inline Address address_from_u64(std::uint64_t v) {
  Address a;
  for (int i = 0; i < 8; ++i) a.bytes[19 - i] = static_cast<std::uint8_t>(v >> (8 * i));
  return a;
}

class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16(std::uint16_t v) { be(v, 2); }
  void u32(std::uint32_t v) { be(v, 4); }
  void u64(std::uint64_t v) { be(v, 8); }
  void raw(ByteView data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
  // u32 length prefix followed by the bytes.
  void blob(ByteView data) {
    u32(static_cast<std::uint32_t>(data.size()));
    raw(data);
  }
  void str(std::string_view s) {
    blob(ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
  }
  const Bytes& data() const& { return buf_; }
  Bytes take() && { return std::move(buf_); }

 private:
  void be(std::uint64_t v, int n) {
    for (int i = n - 1; i >= 0; --i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  Bytes buf_;
};

// Bounds-checked reader. Any read past the end sets `failed()` and yields zeros;
// callers check `ok_and_done()` once after decoding a whole structure.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(be(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(be(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(be(4)); }
  std::uint64_t u64() { return be(8); }
  ByteView raw(std::size_t n) {
    if (remaining() < n) {
      failed_ = true;
      pos_ = data_.size();
      return {};
    }
    ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  template <std::size_t N>
  std::array<std::uint8_t, N> fixed() {
    std::array<std::uint8_t, N> out{};
    ByteView v = raw(N);
    if (v.size() == N) std::copy(v.begin(), v.end(), out.begin());
    return out;
  }
  Bytes blob(std::size_t max_len = 1u << 26) {
    std::uint32_t n = u32();
    if (n > max_len) {
      failed_ = true;
      return {};
    }
    ByteView v = raw(n);
    return Bytes(v.begin(), v.end());
  }
  std::string str(std::size_t max_len = 1u << 16) {
    Bytes b = blob(max_len);
    return std::string(b.begin(), b.end());
  }

  std::size_t remaining() const { return data_.size() - pos_; }
  bool failed() const { return failed_; }
  // True when no read failed and every byte was consumed.
  bool ok_and_done() const { return !failed_ && pos_ == data_.size(); }

 private:
  std::uint64_t be(int n) {
    ByteView v = raw(static_cast<std::size_t>(n));
    std::uint64_t out = 0;
    for (std::uint8_t b : v) out = out << 8 | b;
    return out;
  }
  ByteView data_;
  std::size_t pos_ = 0;
  bool failed_ = false;
};

// Naive substring search over raw bytes; used by data-minimization scans.
inline bool contains_bytes(ByteView haystack, ByteView needle) {
  if (needle.empty()) return true;
  if (needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + i)) return true;
  }
  return false;
}

inline ByteView as_bytes(std::string_view s) {
  return ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

}  // namespace zkc

#endif  // ZKC_COMMON_BYTES_HPP_
