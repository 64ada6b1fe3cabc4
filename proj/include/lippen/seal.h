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

#ifndef LIPPEN_SEAL_H_
#define LIPPEN_SEAL_H_

#include <array>
#include <cstdint>
#include <optional>

#include "lippen/cipher.h"
#include "lippen/status.h"

namespace lippen {

// Pointer layout, from bit 0 upward:
//   [0, align)          alignment bits, zero in every canonical pointer
//   [align, A)          bits that take part in address generation
//   [A, A + tag)        memory-tagging field, passed through untouched
//   [A + tag, 64)       unused high bits, zero in every canonical pointer
// m1 is XORed onto the unused high bits first (starting just above the tag
// field) and then onto the alignment bits, lowest first.
struct ModifierConfig {
  unsigned m1_bits = 0;
  unsigned m2_bits = 0;
  unsigned addr_width = 48;
  unsigned tag_bits = 0;
  unsigned align_bits = 0;

  friend bool operator==(const ModifierConfig&,
                         const ModifierConfig&) = default;
};

// Largest m1 that stays clear of address and tag bits: 64 - A - tag + align.
// For A=48 with word alignment this is 18.
int M1Budget(const ModifierConfig& cfg);

Status ValidateConfig(const ModifierConfig& cfg);

// E = 128 - |m| - |tag| + (64 - A): key bits left to separate domains.
Result<int> EffectiveDomainEntropy(const ModifierConfig& cfg);

struct PointerLayout {
  uint64_t alignment_mask = 0;
  uint64_t address_mask = 0;
  uint64_t tag_mask = 0;
  uint64_t unused_mask = 0;
  // Bits that must be zero in a canonical pointer and after unsealing.
  uint64_t check_mask = 0;
  // Pointer bits that receive m1.
  uint64_t m1_mask = 0;
  // Bit position receiving m1 bit i; m1 bits beyond the budget spill
  // upward into the address bits (only reachable through unchecked configs).
  std::array<uint8_t, 64> m1_positions{};
};

// Computes the layout without validating; misconfigured inputs yield the
// overlapping placement an unchecked engine would use. m1_bits must not
// exceed 64 - tag_bits.
PointerLayout ComputeLayout(const ModifierConfig& cfg);

// Up to 192 bits of context, little-endian limbs. m1 is the low m1_bits,
// m2 the next m2_bits.
struct Modifier {
  std::array<uint64_t, 3> limbs{};

  static Modifier FromU64(uint64_t v) { return Modifier{{v, 0, 0}}; }
  // m1 in the low m1_bits, followed by the 128-bit m2 value m2_high:m2_low.
  static Modifier FromParts(unsigned m1_bits, uint64_t m1, uint64_t m2_low,
                            uint64_t m2_high = 0);
  // Bits [lo, lo + n) as a word, n <= 64.
  uint64_t Field(unsigned lo, unsigned n) const;
  bool IsZero() const { return (limbs[0] | limbs[1] | limbs[2]) == 0; }

  friend bool operator==(const Modifier&, const Modifier&) = default;
};

struct PlainPointer {
  uint64_t value = 0;
  friend bool operator==(const PlainPointer&, const PlainPointer&) = default;
};

struct SealedPointer {
  uint64_t value = 0;
  friend bool operator==(const SealedPointer&, const SealedPointer&) = default;
};

// XOR mask applied to the key: m2 lands in the low m2_bits of k1 and, past
// 64 bits, in the low bits of k0.
Key128 ExpandM2(const Modifier& mod, const ModifierConfig& cfg);

// Seal/unseal under a fixed cipher and configuration.
class SealEngine {
 public:
  static Result<SealEngine> Create(CipherKind kind, const ModifierConfig& cfg);
  // Skips ValidateConfig. Used to model misconfigured hardware in tests and
  // attack experiments.
  static SealEngine CreateUnchecked(CipherKind kind, const ModifierConfig& cfg);

  const ModifierConfig& config() const { return cfg_; }
  const PointerLayout& layout() const { return layout_; }
  CipherKind kind() const { return kind_; }

  bool IsCanonical(uint64_t ptr) const {
    return (ptr & layout_.check_mask) == 0;
  }
  uint64_t PlaceM1(uint64_t m1) const;
  Status CheckModifier(const Modifier& mod) const;

  Result<SealedPointer> Seal(const Key128& key, PlainPointer ptr,
                             const Modifier& mod) const;
  // On failure the error is kIntegrityException carrying the garbled value.
  Result<PlainPointer> Unseal(const Key128& key, SealedPointer sealed,
                              const Modifier& mod) const;

  // Allocation-free forms for inner loops. The modifier is pre-split into
  // the placed m1 word and the key after m2 mixing.
  struct Context {
    Key128 key;
    uint64_t placed_m1;
  };
  Context MakeContext(const Key128& key, const Modifier& mod) const;
  uint64_t SealRaw(const Context& ctx, uint64_t ptr) const {
    return Encrypt(kind_, ctx.key, ptr ^ ctx.placed_m1);
  }
  // Returns the decrypted value q; it is valid iff IsCanonical(q).
  uint64_t UnsealRaw(const Context& ctx, uint64_t sealed) const {
    return Decrypt(kind_, ctx.key, sealed) ^ ctx.placed_m1;
  }

 private:
  SealEngine(CipherKind kind, const ModifierConfig& cfg);

  CipherKind kind_;
  ModifierConfig cfg_;
  PointerLayout layout_;
};

// Convenience wrappers that validate cfg on every call.
Result<SealedPointer> Seal(CipherKind kind, const Key128& key, PlainPointer ptr,
                           const Modifier& mod, const ModifierConfig& cfg);
Result<PlainPointer> Unseal(CipherKind kind, const Key128& key,
                            SealedPointer sealed, const Modifier& mod,
                            const ModifierConfig& cfg);

}  // namespace lippen

#endif  // LIPPEN_SEAL_H_
