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

#ifndef LIPPEN_HEX_H_
#define LIPPEN_HEX_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lippen/cipher.h"
#include "lippen/seal.h"

namespace lippen {

// Strict form: exactly 16 lowercase hex digits, no prefix. Lenient form
// additionally accepts a 0x prefix, uppercase digits and fewer digits.
enum class HexMode { kStrict, kLenient };

std::optional<uint64_t> ParseHex64(std::string_view text, HexMode mode);
// 32 digits, k0 first.
std::optional<Key128> ParseKeyHex(std::string_view text, HexMode mode);
// Up to 48 digits; in strict mode the digit count must be a multiple of 16.
std::optional<Modifier> ParseModifierHex(std::string_view text, HexMode mode);
// Decimal, or hex with a 0x prefix.
std::optional<uint64_t> ParseNumber(std::string_view text);

std::string FormatHex64(uint64_t value);
std::string FormatKey(const Key128& key);

}  // namespace lippen

#endif  // LIPPEN_HEX_H_
