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

#include "lippen/hex.h"

#include <charconv>
#include <cstdio>

namespace lippen {
namespace {

// Parses up to 16 * N hex digits into little-endian 64-bit limbs.
template <size_t N>
bool ParseDigits(std::string_view text, HexMode mode, size_t strict_digits,
                 uint64_t (&limbs)[N]) {
  if (mode == HexMode::kLenient &&
      (text.starts_with("0x") || text.starts_with("0X"))) {
    text.remove_prefix(2);
  }
  if (text.empty() || text.size() > 16 * N) return false;
  if (mode == HexMode::kStrict && strict_digits != 0 &&
      text.size() != strict_digits) {
    return false;
  }
  for (auto& l : limbs) l = 0;
  for (char c : text) {
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (mode == HexMode::kLenient && c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      return false;
    }
    for (size_t i = N; i-- > 1;) limbs[i] = (limbs[i] << 4) | (limbs[i - 1] >> 60);
    limbs[0] = (limbs[0] << 4) | static_cast<uint64_t>(v);
  }
  return true;
}

}  // namespace

std::optional<uint64_t> ParseHex64(std::string_view text, HexMode mode) {
  uint64_t limbs[1];
  if (!ParseDigits(text, mode, 16, limbs)) return std::nullopt;
  return limbs[0];
}

std::optional<Key128> ParseKeyHex(std::string_view text, HexMode mode) {
  uint64_t limbs[2];
  if (!ParseDigits(text, mode, 32, limbs)) return std::nullopt;
  return Key128{limbs[1], limbs[0]};
}

std::optional<Modifier> ParseModifierHex(std::string_view text, HexMode mode) {
  uint64_t limbs[3];
  if (mode == HexMode::kStrict && text.size() % 16 != 0) return std::nullopt;
  if (!ParseDigits(text, mode, 0, limbs)) return std::nullopt;
  return Modifier{{limbs[0], limbs[1], limbs[2]}};
}

std::optional<uint64_t> ParseNumber(std::string_view text) {
  int base = 10;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    text.remove_prefix(2);
    base = 16;
  }
  if (text.empty()) return std::nullopt;
  uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

std::string FormatHex64(uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

std::string FormatKey(const Key128& key) {
  return FormatHex64(key.k0) + FormatHex64(key.k1);
}

}  // namespace lippen
