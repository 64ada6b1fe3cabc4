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

#ifndef LIPPEN_ATTACK_H_
#define LIPPEN_ATTACK_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lippen/cipher.h"
#include "lippen/domain.h"
#include "lippen/seal.h"
#include "lippen/status.h"

namespace lippen::attack {

struct ExperimentReport {
  std::string kind;
  uint64_t seed = 0;
  uint64_t trials = 0;
  // Acceptances, successes or collisions, depending on the experiment.
  uint64_t events = 0;
  double estimate = 0;
  double std_error = 0;
  double expected = 0;
  // Half-width of the band around expected that the estimate must hit.
  double tolerance = 0;
  bool passed = false;
  double wall_time_seconds = 0;
  std::map<uint64_t, uint64_t> histogram;
  std::vector<std::pair<std::string, double>> extra;
};

// ---------------------------------------------------------------------------
// Detection rate

enum class ForgeryMode {
  kRandomCiphertext,  // attacker substitutes a uniformly random word
  kWrongModifier,     // valid ciphertext, uniformly random other modifier
  kBitFlip,           // valid ciphertext with one random bit flipped
};

struct DetectionSpec {
  unsigned m1_bits = 8;
  uint64_t trials = 1'000'000;
  uint64_t seed = 1;
  ForgeryMode mode = ForgeryMode::kRandomCiphertext;
  CipherKind cipher = CipherKind::kPrinceV2;
};

// Layout used by DetectionRate: m1 fills every checked bit, so a forgery is
// accepted with probability exactly 2^-m1 (A = 64 - m1, no tag, no
// alignment bits, 48-bit m2).
ModifierConfig DetectionConfig(unsigned m1_bits);

// Estimates the probability that unseal accepts a forgery. Passes when the
// estimate lies within 3 binomial standard deviations of 2^-m1. The
// histogram buckets accepted forgeries by the top four address bits and
// extra carries the chi-square uniformity p-value over those buckets.
Result<ExperimentReport> DetectionRate(const DetectionSpec& spec);

// Upper tail probability of the chi-square statistic for counts against a
// uniform expectation.
double ChiSquareUniformPValue(const std::vector<uint64_t>& counts);

// ---------------------------------------------------------------------------
// Bit-flip attack

// The attacker holds a valid (m_v, p_v, c_v) and tries
// (m1_a = m1_v ^ X, p_a = p_v ^ X, c_a = c_v).
struct BitflipResult {
  uint64_t mask = 0;
  // X can be expressed as an m1 difference (X within the m1 placement).
  bool expressible = false;
  // Dec(c_a) ^ place(m1_a) == p_v ^ X, i.e. the forged tuple is
  // algebraically consistent.
  bool tuple_valid = false;
  // The zero check on the non-address bits passed.
  bool unseal_accepted = false;
  uint64_t yielded = 0;
  bool flips_address_bits = false;
  // Valid tuple, accepted by unseal, and the address actually moved.
  bool address_hijacked = false;
};

// validated = false builds an unchecked engine so misconfigured layouts can
// be demonstrated.
Result<BitflipResult> BitflipAttack(const ModifierConfig& cfg, uint64_t mask,
                                    uint64_t seed, bool validated = true,
                                    CipherKind cipher = CipherKind::kPrinceV2);

// ---------------------------------------------------------------------------
// Brute force

struct BruteForceSpec {
  unsigned pac_bits = 8;
  ModifierConfig lippen = {16, 48, 48, 0, 0};
  uint64_t pac_trials = 10'000;
  uint64_t lippen_trials = 100;
  uint64_t max_guesses = 1'000'000;
  uint64_t seed = 1;
  CipherKind cipher = CipherKind::kPrinceV2;
};

// Attacker-chosen target of every guess loop.
inline constexpr uint64_t kBruteForceTarget = 0x0000414141414140ULL;

struct BruteForceReports {
  // Mean guesses to success; expected (2^b + 1) / 2 within 5%.
  ExperimentReport pac;
  // Success count over all LIPPEN trials; expected 0.
  ExperimentReport lippen;
};

Result<BruteForceReports> BruteForceCompare(const BruteForceSpec& spec);

// ---------------------------------------------------------------------------
// Key collision

// Searches for derived-key collisions key_a ^ m2_a == key_b ^ m2_b between
// live domains. Tables of width <= 16 are searched exhaustively over all
// domain pairs and all m2 pairs; wider tables are probed at random.
Result<ExperimentReport> KeyCollisionProbe(const DomainKeyTable& table,
                                           uint64_t probes, uint64_t seed);

// ---------------------------------------------------------------------------
// Avalanche (thin wrapper for report output)

Result<ExperimentReport> AvalancheExperiment(CipherKind cipher,
                                             uint64_t samples, bool flip_key,
                                             uint64_t seed);

}  // namespace lippen::attack

#endif  // LIPPEN_ATTACK_H_
