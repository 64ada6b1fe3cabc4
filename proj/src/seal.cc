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

#include "lippen/seal.h"

#include <string>

namespace lippen {
namespace {

constexpr unsigned kMaxAlignBits = 8;

constexpr uint64_t LowMask(unsigned n) {
  return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

constexpr uint64_t RangeMask(unsigned lo, unsigned hi) {
  return hi <= lo ? 0 : (LowMask(hi - lo) << lo);
}

}  // namespace

int M1Budget(const ModifierConfig& cfg) {
  return 64 - static_cast<int>(cfg.addr_width) -
         static_cast<int>(cfg.tag_bits) + static_cast<int>(cfg.align_bits);
}

Status ValidateConfig(const ModifierConfig& cfg) {
  if (cfg.addr_width < 32 || cfg.addr_width > 64) {
    return MakeError(ErrorCode::kInvalidAddressWidth,
                     "address width must lie in [32, 64], got " +
                         std::to_string(cfg.addr_width));
  }
  if (cfg.addr_width + cfg.tag_bits > 64) {
    return MakeError(ErrorCode::kTagFieldOverflow,
                     "tag field does not fit above the address bits");
  }
  if (cfg.align_bits > kMaxAlignBits) {
    return MakeError(ErrorCode::kAlignTooWide,
                     "at most " + std::to_string(kMaxAlignBits) +
                         " alignment bits are supported");
  }
  if (cfg.m2_bits > 128) {
    return MakeError(ErrorCode::kM2TooWide, "m2 may cover at most 128 key bits");
  }
  if (static_cast<int>(cfg.m1_bits) > M1Budget(cfg)) {
    return MakeError(ErrorCode::kM1OverlapsAddress,
                     "m1_bits=" + std::to_string(cfg.m1_bits) +
                         " exceeds the non-address budget of " +
                         std::to_string(M1Budget(cfg)));
  }
  return Ok{};
}

Result<int> EffectiveDomainEntropy(const ModifierConfig& cfg) {
  if (Status s = ValidateConfig(cfg); !s.ok()) return s.error();
  return 128 - static_cast<int>(cfg.m1_bits + cfg.m2_bits) -
         static_cast<int>(cfg.tag_bits) + (64 - static_cast<int>(cfg.addr_width));
}

PointerLayout ComputeLayout(const ModifierConfig& cfg) {
  PointerLayout l;
  const unsigned a = cfg.addr_width;
  const unsigned tag_top = a + cfg.tag_bits;
  l.alignment_mask = RangeMask(0, cfg.align_bits);
  l.address_mask = RangeMask(cfg.align_bits, a);
  l.tag_mask = RangeMask(a, tag_top);
  l.unused_mask = RangeMask(tag_top, 64);
  l.check_mask = l.unused_mask | l.alignment_mask;

  unsigned i = 0;
  for (unsigned bit = tag_top; bit < 64 && i < cfg.m1_bits; ++bit) {
    l.m1_positions[i++] = static_cast<uint8_t>(bit);
  }
  for (unsigned bit = 0; bit < a && i < cfg.m1_bits; ++bit) {
    l.m1_positions[i++] = static_cast<uint8_t>(bit);
  }
  for (unsigned j = 0; j < i; ++j) l.m1_mask |= 1ULL << l.m1_positions[j];
  return l;
}

uint64_t Modifier::Field(unsigned lo, unsigned n) const {
  if (n == 0 || lo >= 192) return 0;
  const unsigned limb = lo / 64;
  const unsigned shift = lo % 64;
  uint64_t v = limbs[limb] >> shift;
  if (shift != 0 && limb + 1 < limbs.size()) v |= limbs[limb + 1] << (64 - shift);
  return v & LowMask(n);
}

Modifier Modifier::FromParts(unsigned m1_bits, uint64_t m1, uint64_t m2_low,
                             uint64_t m2_high) {
  Modifier mod;
  mod.limbs[0] = m1 & LowMask(m1_bits);
  // Insert the 128-bit m2 at bit offset m1_bits.
  const uint64_t parts[2] = {m2_low, m2_high};
  for (unsigned p = 0; p < 2; ++p) {
    const unsigned lo = m1_bits + 64 * p;
    const unsigned limb = lo / 64;
    const unsigned shift = lo % 64;
    if (limb < mod.limbs.size()) mod.limbs[limb] |= parts[p] << shift;
    if (shift != 0 && limb + 1 < mod.limbs.size()) {
      mod.limbs[limb + 1] |= parts[p] >> (64 - shift);
    }
  }
  return mod;
}

Key128 ExpandM2(const Modifier& mod, const ModifierConfig& cfg) {
  const unsigned low = cfg.m2_bits < 64 ? cfg.m2_bits : 64;
  const unsigned high = cfg.m2_bits > 64 ? cfg.m2_bits - 64 : 0;
  return Key128{mod.Field(cfg.m1_bits + 64, high),
                mod.Field(cfg.m1_bits, low)};
}

SealEngine::SealEngine(CipherKind kind, const ModifierConfig& cfg)
    : kind_(kind), cfg_(cfg), layout_(ComputeLayout(cfg)) {}

Result<SealEngine> SealEngine::Create(CipherKind kind,
                                      const ModifierConfig& cfg) {
  if (Status s = ValidateConfig(cfg); !s.ok()) return s.error();
  return SealEngine(kind, cfg);
}

SealEngine SealEngine::CreateUnchecked(CipherKind kind,
                                       const ModifierConfig& cfg) {
  return SealEngine(kind, cfg);
}

uint64_t SealEngine::PlaceM1(uint64_t m1) const {
  uint64_t placed = 0;
  for (unsigned i = 0; i < cfg_.m1_bits; ++i) {
    if ((m1 >> i) & 1) placed |= 1ULL << layout_.m1_positions[i];
  }
  return placed;
}

Status SealEngine::CheckModifier(const Modifier& mod) const {
  const unsigned used = cfg_.m1_bits + cfg_.m2_bits;
  for (unsigned limb = 0; limb < mod.limbs.size(); ++limb) {
    const unsigned lo = 64 * limb;
    uint64_t allowed = 0;
    if (used > lo) allowed = LowMask(used - lo);
    if (mod.limbs[limb] & ~allowed) {
      return MakeError(ErrorCode::kModifierOutOfRange,
                       "modifier has bits set beyond m1_bits + m2_bits");
    }
  }
  return Ok{};
}

SealEngine::Context SealEngine::MakeContext(const Key128& key,
                                            const Modifier& mod) const {
  return Context{key ^ ExpandM2(mod, cfg_),
                 PlaceM1(mod.Field(0, cfg_.m1_bits))};
}

Result<SealedPointer> SealEngine::Seal(const Key128& key, PlainPointer ptr,
                                       const Modifier& mod) const {
  if (Status s = CheckModifier(mod); !s.ok()) return s.error();
  if (!IsCanonical(ptr.value)) {
    return MakeError(ErrorCode::kNonCanonicalPointer,
                     "pointer has bits set outside the address and tag fields",
                     ptr.value);
  }
  return SealedPointer{SealRaw(MakeContext(key, mod), ptr.value)};
}

Result<PlainPointer> SealEngine::Unseal(const Key128& key, SealedPointer sealed,
                                        const Modifier& mod) const {
  if (Status s = CheckModifier(mod); !s.ok()) return s.error();
  const uint64_t q = UnsealRaw(MakeContext(key, mod), sealed.value);
  if (!IsCanonical(q)) {
    return MakeError(ErrorCode::kIntegrityException, "integrity check failed",
                     q);
  }
  return PlainPointer{q};
}

Result<SealedPointer> Seal(CipherKind kind, const Key128& key, PlainPointer ptr,
                           const Modifier& mod, const ModifierConfig& cfg) {
  Result<SealEngine> engine = SealEngine::Create(kind, cfg);
  if (!engine.ok()) return engine.error();
  return engine->Seal(key, ptr, mod);
}

Result<PlainPointer> Unseal(CipherKind kind, const Key128& key,
                            SealedPointer sealed, const Modifier& mod,
                            const ModifierConfig& cfg) {
  Result<SealEngine> engine = SealEngine::Create(kind, cfg);
  if (!engine.ok()) return engine.error();
  return engine->Unseal(key, sealed, mod);
}

}  // namespace lippen
