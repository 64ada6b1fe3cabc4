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

#ifndef LIPPEN_CIPHER_H_
#define LIPPEN_CIPHER_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace lippen {

// One 64-bit cipher block. Blocks are plain unsigned integers; the most
// significant nibble is nibble 0 of the cipher state.
using Block64 = uint64_t;

// 128-bit key, K = k0 || k1 (k0 is the high half).
struct Key128 {
  uint64_t k0 = 0;
  uint64_t k1 = 0;

  friend bool operator==(const Key128&, const Key128&) = default;
  friend Key128 operator^(const Key128& a, const Key128& b) {
    return {a.k0 ^ b.k0, a.k1 ^ b.k1};
  }
};

enum class CipherKind { kPrince, kPrinceV2 };

std::string_view CipherKindName(CipherKind kind);
// Accepts "prince" and "princev2" (case-insensitive).
std::optional<CipherKind> ParseCipherKind(std::string_view name);

Block64 Encrypt(CipherKind kind, const Key128& key, Block64 plaintext);
Block64 Decrypt(CipherKind kind, const Key128& key, Block64 ciphertext);

namespace prince {

inline constexpr uint64_t kAlpha = 0xc0ac29b7c97c50ddULL;
// Middle-layer constant of PRINCEv2.
inline constexpr uint64_t kBeta = 0x3f84d5b5b5470917ULL;

// k0' = (k0 >>> 1) ^ (k0 >> 63).
uint64_t DeriveOutputWhitening(uint64_t k0);

// PRINCE with explicit input/output whitening keys around PRINCEcore(k1).
// Encrypt(kPrince, {k0, k1}, x) == FxEncrypt(k0, DeriveOutputWhitening(k0),
// k1, x), and decryption is FxEncrypt(k0', k0, k1 ^ kAlpha, y).
Block64 FxEncrypt(uint64_t whiten_in, uint64_t whiten_out, uint64_t k1,
                  Block64 block);

// Individual layers, exposed for tests.
uint64_t SubNibbles(uint64_t state);
uint64_t InvSubNibbles(uint64_t state);
uint64_t MixPrime(uint64_t state);  // M', an involution
uint64_t ShiftRows(uint64_t state);
uint64_t InvShiftRows(uint64_t state);

}  // namespace prince
}  // namespace lippen

#endif  // LIPPEN_CIPHER_H_
