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

#ifndef LIPPEN_AVALANCHE_H_
#define LIPPEN_AVALANCHE_H_

#include <cstdint>
#include <functional>

#include "lippen/cipher.h"
#include "lippen/status.h"

namespace lippen {

struct AvalancheStats {
  double mean = 0;
  double stddev = 0;
  uint64_t samples = 0;
};

enum class FlipTarget { kPlaintext, kKey };

using BlockFunction = std::function<Block64(const Key128&, Block64)>;

inline constexpr uint64_t kMinAvalancheSamples = 1000;

// Mean and standard deviation of the Hamming distance between f(k, x) and
// f(k', x') where exactly one input bit (of x, or of the key) is flipped.
// Key, block and bit position are drawn at random for every sample.
Result<AvalancheStats> MeasureAvalanche(const BlockFunction& f,
                                        uint64_t samples, FlipTarget target,
                                        uint64_t seed);

Result<AvalancheStats> CipherAvalanche(CipherKind kind, uint64_t samples,
                                       FlipTarget target, uint64_t seed);

}  // namespace lippen

#endif  // LIPPEN_AVALANCHE_H_
