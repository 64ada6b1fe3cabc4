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

#include "lippen/status.h"

namespace lippen {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kM1OverlapsAddress: return "M1_OVERLAPS_ADDRESS";
    case ErrorCode::kM2TooWide: return "M2_TOO_WIDE";
    case ErrorCode::kInvalidAddressWidth: return "INVALID_ADDRESS_WIDTH";
    case ErrorCode::kTagFieldOverflow: return "TAG_FIELD_OVERFLOW";
    case ErrorCode::kAlignTooWide: return "ALIGN_TOO_WIDE";
    case ErrorCode::kPacTooWide: return "PAC_TOO_WIDE";
    case ErrorCode::kNonCanonicalPointer: return "NON_CANONICAL_POINTER";
    case ErrorCode::kModifierOutOfRange: return "MODIFIER_OUT_OF_RANGE";
    case ErrorCode::kIntegrityException: return "INTEGRITY_EXCEPTION";
    case ErrorCode::kCorruptedPointer: return "CORRUPTED_POINTER";
    case ErrorCode::kLiveDomainsExist: return "LIVE_DOMAINS_EXIST";
    case ErrorCode::kNoActiveConfig: return "NO_ACTIVE_CONFIG";
    case ErrorCode::kCapacityExhausted: return "CAPACITY_EXHAUSTED";
    case ErrorCode::kUnaffectedBitsCollision: return "UNAFFECTED_BITS_COLLISION";
    case ErrorCode::kUnknownDomain: return "UNKNOWN_DOMAIN";
    case ErrorCode::kInvalidKeyWidth: return "INVALID_KEY_WIDTH";
    case ErrorCode::kSamplesTooSmall: return "SAMPLES_TOO_SMALL";
    case ErrorCode::kUnderPowered: return "UNDER_POWERED";
    case ErrorCode::kMalformedScenario: return "MALFORMED_SCENARIO";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace lippen
