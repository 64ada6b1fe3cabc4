// Copyright 2026 The Lippen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIPPEN_STATUS_H_
#define LIPPEN_STATUS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace lippen {

// Error codes shared by the library and the CLI. The names returned by
// ErrorCodeName() are the machine-readable strings printed on stderr.
enum class ErrorCode {
  kM1OverlapsAddress,
  kM2TooWide,
  kInvalidAddressWidth,
  kTagFieldOverflow,
  kAlignTooWide,
  kPacTooWide,
  kNonCanonicalPointer,
  kModifierOutOfRange,
  kIntegrityException,
  kCorruptedPointer,
  kLiveDomainsExist,
  kNoActiveConfig,
  kCapacityExhausted,
  kUnaffectedBitsCollision,
  kUnknownDomain,
  kInvalidKeyWidth,
  kSamplesTooSmall,
  kUnderPowered,
  kMalformedScenario,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

struct Error {
  ErrorCode code;
  std::string message;
  // Raw value attached to integrity failures (the garbled plaintext or the
  // corrupted pointer); zero otherwise.
  uint64_t diagnostic = 0;
};

// Value-or-error return type. Kept deliberately small: callers test ok()
// and then read value() or error().
template <typename T>
class Result {
 public:
  Result(T value) : state_(std::move(value)) {}  // NOLINT: implicit by design
  Result(Error error) : state_(std::move(error)) {}  // NOLINT

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(state_); }
  T& value() & { return std::get<T>(state_); }
  T&& value() && { return std::get<T>(std::move(state_)); }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const Error& error() const { return std::get<Error>(state_); }
  ErrorCode code() const { return error().code; }

 private:
  std::variant<T, Error> state_;
};

struct Ok {};
using Status = Result<Ok>;

inline Error MakeError(ErrorCode code, std::string message,
                       uint64_t diagnostic = 0) {
  return Error{code, std::move(message), diagnostic};
}

}  // namespace lippen

#endif  // LIPPEN_STATUS_H_
