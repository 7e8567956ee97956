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

#ifndef ZKC_VAULT_VAULT_HPP_
#define ZKC_VAULT_VAULT_HPP_

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "zkc/circuit/age_circuit.hpp"
#include "zkc/common/bytes.hpp"
#include "zkc/common/crypto.hpp"
#include "zkc/common/error.hpp"
#include "zkc/hash/poseidon.hpp"

namespace zkc::vault {

using circuit::Salt;
using bn254::Fr;

inline constexpr int kVaultVersion = 1;

struct AttributeRecord {
  std::string name;
  std::uint32_t value = 0;
  Salt salt;
  Fr commitment;

  bool consistent() const {
    return hash::commitment_hash(Fr::from_u64(value), circuit::salt_to_field(salt)) == commitment;
  }
  circuit::Witness witness() const { return {value, salt}; }
  friend bool operator==(const AttributeRecord&, const AttributeRecord&) = default;
};

inline Salt sample_salt() {
  Salt s;
  secure_random(s.bytes);
  return s;
}

inline AttributeRecord make_record(std::string name, std::uint32_t value, const Salt& salt) {
  return {std::move(name), value, salt, hash::commitment_hash(Fr::from_u64(value), circuit::salt_to_field(salt))};
}

namespace internal {

// Exclusive advisory lock on "<vault>.lock", held for the object's lifetime.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0600);
    if (fd_ < 0) throw Error(ErrorCode::kIoFailure, "cannot open lock file " + path.string());
    if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
      int err = errno;
      ::close(fd_);
      fd_ = -1;
      if (err == EWOULDBLOCK) throw Error(ErrorCode::kVaultLocked, path.string());
      throw Error(ErrorCode::kIoFailure, "flock failed");
    }
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

inline std::filesystem::path lock_path(const std::filesystem::path& p) { return p.string() + ".lock"; }

}  // namespace internal

// The vault document: owner plus named attribute records.
class Vault {
 public:
  Vault() = default;

  // Writes a new empty vault. Fails with PathExists unless `force`.
  static Vault init(const std::filesystem::path& path, const Address& owner, bool force = false) {
    std::error_code ec;
    if (std::filesystem::exists(path, ec) && !force) throw Error(ErrorCode::kPathExists, path.string());
    Vault v;
    v.path_ = path;
    v.owner_ = owner;
    v.lock_ = std::make_shared<internal::FileLock>(internal::lock_path(path));
    v.save();
    return v;
  }

  // Opens for writing (takes the lock) or read-only (no lock; writes are
  // atomic renames so a reader always sees a whole document).
  static Vault open(const std::filesystem::path& path, bool writable = true) {
    std::shared_ptr<internal::FileLock> lock;
    if (writable) lock = std::make_shared<internal::FileLock>(internal::lock_path(path));
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIoFailure, "cannot read vault " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    Vault v = from_json_text(ss.str());
    v.path_ = path;
    v.lock_ = std::move(lock);
    return v;
  }

  const Address& owner() const { return owner_; }
  int version() const { return version_; }
  const std::map<std::string, AttributeRecord>& records() const { return records_; }
  const std::filesystem::path& path() const { return path_; }

  const AttributeRecord& add_attribute(const std::string& name, std::int64_t value) {
    if (name.empty()) throw Error(ErrorCode::kInvalidArgument, "empty attribute name");
    if (value < 0 || value > 0xffffffffLL) throw Error(ErrorCode::kValueOutOfRange, "value must be in [0, 2^32)");
    if (records_.count(name)) throw Error(ErrorCode::kDuplicateName, name);
    if (!path_.empty() && !lock_) throw Error(ErrorCode::kVaultLocked, "vault opened read-only");
    auto [it, _] = records_.emplace(name, make_record(name, static_cast<std::uint32_t>(value), sample_salt()));
    if (!path_.empty()) {
      try {
        save();
      } catch (...) {
        records_.erase(it);
        throw;
      }
    }
    return it->second;
  }

  const AttributeRecord& get_record(const std::string& name) const {
    auto it = records_.find(name);
    if (it == records_.end()) throw Error(ErrorCode::kNotFound, name);
    return it->second;
  }

  nlohmann::json to_json() const {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& [name, r] : records_) {
      recs.push_back({{"name", name},
                      {"value", r.value},
                      {"salt", r.salt.hex()},
                      {"commitment", circuit::field_hex(r.commitment)}});
    }
    return {{"version", version_}, {"owner", owner_.hex()}, {"records", recs}};
  }

  std::string to_json_text() const { return to_json().dump(2) + "\n"; }

  // Parses and checks every stored commitment. Errors are CorruptVault.
  static Vault from_json_text(const std::string& text) {
    auto fail = [](const std::string& why) { return Error(ErrorCode::kCorruptVault, why); };
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw fail(e.what());
    }
    Vault v;
    try {
      v.version_ = j.at("version").get<int>();
      if (v.version_ != kVaultVersion) throw fail("unsupported version");
      if (!Address::parse(j.at("owner").get<std::string>(), v.owner_)) throw fail("owner");
      for (const auto& r : j.at("records")) {
        AttributeRecord rec;
        rec.name = r.at("name").get<std::string>();
        std::int64_t value = r.at("value").get<std::int64_t>();
        if (value < 0 || value > 0xffffffffLL) throw fail("value out of range: " + rec.name);
        rec.value = static_cast<std::uint32_t>(value);
        if (!Salt::parse(r.at("salt").get<std::string>(), rec.salt)) throw fail("salt: " + rec.name);
        if (!circuit::parse_field_hex(r.at("commitment").get<std::string>(), rec.commitment)) {
          throw fail("commitment: " + rec.name);
        }
        if (!rec.consistent()) throw fail("commitment does not open: " + rec.name);
        if (!v.records_.emplace(rec.name, rec).second) throw fail("duplicate record " + rec.name);
      }
    } catch (const nlohmann::json::exception& e) {
      throw fail(e.what());
    }
    return v;
  }

 private:
  // Owner-only file, written to a temp then renamed into place.
  void save() const {
    const std::filesystem::path tmp = path_.string() + ".tmp";
    const std::string text = to_json_text();
    int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0600);
    if (fd < 0) throw Error(ErrorCode::kIoFailure, "cannot write " + tmp.string());
    ::fchmod(fd, 0600);
    std::size_t off = 0;
    while (off < text.size()) {
      ssize_t n = ::write(fd, text.data() + off, text.size() - off);
      if (n <= 0) {
        ::close(fd);
        throw Error(ErrorCode::kIoFailure, "short write");
      }
      off += static_cast<std::size_t>(n);
    }
    ::fsync(fd);
    ::close(fd);
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) throw Error(ErrorCode::kIoFailure, ec.message());
  }

  int version_ = kVaultVersion;
  Address owner_;
  std::map<std::string, AttributeRecord> records_;
  std::filesystem::path path_;
  std::shared_ptr<internal::FileLock> lock_;
};

}  // namespace zkc::vault

#endif  // ZKC_VAULT_VAULT_HPP_
