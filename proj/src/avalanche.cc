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

#include "lippen/avalanche.h"

#include <bit>
#include <cmath>
#include <string>

#include "lippen/random.h"

namespace lippen {

Result<AvalancheStats> MeasureAvalanche(const BlockFunction& f,
                                        uint64_t samples, FlipTarget target,
                                        uint64_t seed) {
  if (samples < kMinAvalancheSamples) {
    return MakeError(ErrorCode::kSamplesTooSmall,
                     "avalanche needs at least " +
                         std::to_string(kMinAvalancheSamples) + " samples");
  }
  CounterRng rng(seed);
  double mean = 0;
  double m2 = 0;
  for (uint64_t n = 1; n <= samples; ++n) {
    const Key128 key{rng(), rng()};
    const Block64 x = rng();
    Block64 a = f(key, x);
    Block64 b;
    if (target == FlipTarget::kPlaintext) {
      b = f(key, x ^ (1ULL << rng.Below(64)));
    } else {
      const uint64_t bit = rng.Below(128);
      Key128 flipped = key;
      if (bit < 64) {
        flipped.k1 ^= 1ULL << bit;
      } else {
        flipped.k0 ^= 1ULL << (bit - 64);
      }
      b = f(flipped, x);
    }
    const double d = std::popcount(a ^ b);
    const double delta = d - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (d - mean);
  }
  return AvalancheStats{mean, std::sqrt(m2 / static_cast<double>(samples - 1)),
                        samples};
}

Result<AvalancheStats> CipherAvalanche(CipherKind kind, uint64_t samples,
                                       FlipTarget target, uint64_t seed) {
  return MeasureAvalanche(
      [kind](const Key128& k, Block64 x) { return Encrypt(kind, k, x); },
      samples, target, seed);
}

}  // namespace lippen
