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

#ifndef ZKC_COMMON_ERROR_HPP_
#define ZKC_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace zkc {

// Every domain failure in the library is reported as a zkc::Error carrying
// one of these codes. The code name is the stable, user-facing reason string.
enum class ErrorCode {
  // vault
  kPathExists,
  kIoFailure,
  kDuplicateName,
  kValueOutOfRange,
  kNotFound,
  kInvalidDate,
  kVaultLocked,
  kCorruptVault,
  // circuit
  kParameterOutOfRange,
  kShapeMismatch,
  // proving
  kUnsupportedBackend,
  kUnsatisfiedWitness,
  kFingerprintMismatch,
  kMalformedProof,
  kMalformedKey,
  // ledger
  kIncompleteSchedule,
  kNonPositiveDelta,
  kBadNonce,
  kUnknownContract,
  kMalformedSnapshot,
  // economics
  kNonPositiveGas,
  kInvalidDecimal,
  kUnknownNetwork,
  // service
  kReverted,
  kChainUnavailable,
  kInvalidArgument,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPathExists: return "PathExists";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kInvalidDate: return "InvalidDate";
    case ErrorCode::kVaultLocked: return "VaultLocked";
    case ErrorCode::kCorruptVault: return "CorruptVault";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kUnsupportedBackend: return "UnsupportedBackend";
    case ErrorCode::kUnsatisfiedWitness: return "UnsatisfiedWitness";
    case ErrorCode::kFingerprintMismatch: return "FingerprintMismatch";
    case ErrorCode::kMalformedProof: return "MalformedProof";
    case ErrorCode::kMalformedKey: return "MalformedKey";
    case ErrorCode::kIncompleteSchedule: return "IncompleteSchedule";
    case ErrorCode::kNonPositiveDelta: return "NonPositiveDelta";
    case ErrorCode::kBadNonce: return "BadNonce";
    case ErrorCode::kUnknownContract: return "UnknownContract";
    case ErrorCode::kMalformedSnapshot: return "MalformedSnapshot";
    case ErrorCode::kNonPositiveGas: return "NonPositiveGas";
    case ErrorCode::kInvalidDecimal: return "InvalidDecimal";
    case ErrorCode::kUnknownNetwork: return "UnknownNetwork";
    case ErrorCode::kReverted: return "Reverted";
    case ErrorCode::kChainUnavailable: return "ChainUnavailable";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail.empty()
                               ? std::string(to_string(code))
                               : std::string(to_string(code)) + ": " + detail),
        code_(code),
        reason_(to_string(code)) {}
  explicit Error(ErrorCode code) : Error(code, "") {}

  // A contract revert; `reason` is the contract's revert reason verbatim.
  static Error reverted(std::string reason) {
    Error e(ErrorCode::kReverted, reason);
    e.reason_ = std::move(reason);
    return e;
  }

  ErrorCode code() const noexcept { return code_; }
  // The short machine-readable reason: the code name, or for reverts the
  // contract's reason ("SenderMismatch", "NoActiveRecord", ...).
  const std::string& reason() const noexcept { return reason_; }

 private:
  ErrorCode code_;
  std::string reason_;
};

}  // namespace zkc

#endif  // ZKC_COMMON_ERROR_HPP_
