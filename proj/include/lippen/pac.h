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

#ifndef LIPPEN_PAC_H_
#define LIPPEN_PAC_H_

#include <cstdint>

#include "lippen/cipher.h"
#include "lippen/seal.h"
#include "lippen/status.h"

namespace lippen {

// Truncated-MAC pointer authentication in the style of Armv8.3 PAC. The MAC
// is the low pac_bits of a PRINCE-family encryption; QARMA is not modelled.
enum class PacFailureMode {
  kCorruptTopBits,  // Armv8.3: return an unusable pointer
  kException,       // Armv8.6 FPAC: raise a synchronous exception
};

struct PacConfig {
  unsigned pac_bits = 16;
  PacFailureMode failure_mode = PacFailureMode::kException;
  unsigned addr_width = 48;
  unsigned tag_bits = 0;
  CipherKind kind = CipherKind::kPrinceV2;
};

// Failed authentication in kCorruptTopBits mode returns the stripped pointer
// with bit 62 flipped and bit 63 set.
inline constexpr uint64_t kPacErrorFlip = 1ULL << 62;
inline constexpr uint64_t kPacErrorSet = 1ULL << 63;
inline constexpr uint64_t CorruptTopBits(uint64_t ptr) {
  return (ptr ^ kPacErrorFlip) | kPacErrorSet;
}

Status ValidatePacConfig(const PacConfig& pcfg);

// The PAC field occupies bits [A + tag, A + tag + pac_bits).
int PacFieldShift(const PacConfig& pcfg);
uint64_t PacFieldMask(const PacConfig& pcfg);

// XOR of the modifier's 64-bit limbs.
uint64_t FoldModifier(const Modifier& mod);

uint64_t ComputePac(const PacConfig& pcfg, const Key128& key, uint64_t ptr,
                    uint64_t folded_modifier);

Result<SealedPointer> PacSign(const Key128& key, PlainPointer ptr,
                              const Modifier& mod, const PacConfig& pcfg);

// Mismatch yields kIntegrityException (kException mode) or kCorruptedPointer
// with the corrupted value in Error::diagnostic (kCorruptTopBits mode).
Result<PlainPointer> PacAuth(const Key128& key, SealedPointer signed_ptr,
                             const Modifier& mod, const PacConfig& pcfg);

// Allocation-free check: true iff signed_ptr authenticates.
bool PacAuthenticates(const PacConfig& pcfg, const Key128& key,
                      uint64_t signed_ptr, uint64_t folded_modifier);

}  // namespace lippen

#endif  // LIPPEN_PAC_H_
