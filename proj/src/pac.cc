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

#include "lippen/pac.h"

#include <string>

namespace lippen {
namespace {

uint64_t StrippedMask(const PacConfig& pcfg) {
  const unsigned keep = pcfg.addr_width + pcfg.tag_bits;
  return keep >= 64 ? ~0ULL : ((1ULL << keep) - 1);
}

}  // namespace

Status ValidatePacConfig(const PacConfig& pcfg) {
  if (pcfg.addr_width < 32 || pcfg.addr_width > 64) {
    return MakeError(ErrorCode::kInvalidAddressWidth,
                     "address width must lie in [32, 64]");
  }
  if (pcfg.addr_width + pcfg.tag_bits > 64) {
    return MakeError(ErrorCode::kTagFieldOverflow,
                     "tag field does not fit above the address bits");
  }
  if (pcfg.pac_bits + pcfg.addr_width + pcfg.tag_bits > 64) {
    return MakeError(ErrorCode::kPacTooWide,
                     "pac_bits=" + std::to_string(pcfg.pac_bits) +
                         " does not fit in the unused pointer bits");
  }
  return Ok{};
}

int PacFieldShift(const PacConfig& pcfg) {
  return static_cast<int>(pcfg.addr_width + pcfg.tag_bits);
}

uint64_t PacFieldMask(const PacConfig& pcfg) {
  if (pcfg.pac_bits == 0) return 0;
  const uint64_t width =
      pcfg.pac_bits >= 64 ? ~0ULL : ((1ULL << pcfg.pac_bits) - 1);
  return width << PacFieldShift(pcfg);
}

uint64_t FoldModifier(const Modifier& mod) {
  return mod.limbs[0] ^ mod.limbs[1] ^ mod.limbs[2];
}

uint64_t ComputePac(const PacConfig& pcfg, const Key128& key, uint64_t ptr,
                    uint64_t folded_modifier) {
  if (pcfg.pac_bits == 0) return 0;
  const uint64_t mac = Encrypt(pcfg.kind, key, ptr ^ folded_modifier);
  return (mac << PacFieldShift(pcfg)) & PacFieldMask(pcfg);
}

Result<SealedPointer> PacSign(const Key128& key, PlainPointer ptr,
                              const Modifier& mod, const PacConfig& pcfg) {
  if (Status s = ValidatePacConfig(pcfg); !s.ok()) return s.error();
  if (ptr.value & ~StrippedMask(pcfg)) {
    return MakeError(ErrorCode::kNonCanonicalPointer,
                     "pointer has bits set above the address and tag fields",
                     ptr.value);
  }
  return SealedPointer{ptr.value |
                       ComputePac(pcfg, key, ptr.value, FoldModifier(mod))};
}

bool PacAuthenticates(const PacConfig& pcfg, const Key128& key,
                      uint64_t signed_ptr, uint64_t folded_modifier) {
  const uint64_t stripped = signed_ptr & StrippedMask(pcfg);
  const uint64_t expected =
      stripped | ComputePac(pcfg, key, stripped, folded_modifier);
  return expected == signed_ptr;
}

Result<PlainPointer> PacAuth(const Key128& key, SealedPointer signed_ptr,
                             const Modifier& mod, const PacConfig& pcfg) {
  if (Status s = ValidatePacConfig(pcfg); !s.ok()) return s.error();
  const uint64_t stripped = signed_ptr.value & StrippedMask(pcfg);
  if (PacAuthenticates(pcfg, key, signed_ptr.value, FoldModifier(mod))) {
    return PlainPointer{stripped};
  }
  if (pcfg.failure_mode == PacFailureMode::kException) {
    return MakeError(ErrorCode::kIntegrityException,
                     "pointer authentication failed", signed_ptr.value);
  }
  return MakeError(ErrorCode::kCorruptedPointer,
                   "pointer authentication failed", CorruptTopBits(stripped));
}

}  // namespace lippen
