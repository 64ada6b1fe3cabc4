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

#ifndef LIPPEN_RANDOM_H_
#define LIPPEN_RANDOM_H_

#include <cstdint>
#include <limits>

namespace lippen {

// Counter-based generator: output i of stream (seed, stream) is a fixed
// bijective mix of (key + i * gamma). Streams split by hashing the parent
// key with a stream index, so trial t of an experiment draws from
// Split(t) and results do not depend on how trials are scheduled.
class CounterRng {
 public:
  using result_type = uint64_t;

  explicit CounterRng(uint64_t seed, uint64_t stream = 0)
      : key_(Mix(seed ^ Mix(stream + kGamma))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return Mix(key_ + kGamma * ++counter_); }

  CounterRng Split(uint64_t stream) const { return CounterRng(key_, stream); }

  // Uniform integer in [0, bound); bound must be nonzero.
  uint64_t Below(uint64_t bound);
  // Uniform in [0, 2^bits) for bits in [0, 64].
  uint64_t Bits(unsigned bits);
  // Uniform double in [0, 1).
  double Unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  uint64_t counter() const { return counter_; }

  // SplitMix64 finalizer; a bijection on 64-bit words.
  static constexpr uint64_t Mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace lippen

#endif  // LIPPEN_RANDOM_H_
