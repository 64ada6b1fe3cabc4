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

#include "lippen/attack.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "lippen/avalanche.h"
#include "lippen/random.h"
#include "lippen/vm.h"

namespace lippen::attack {
namespace {

class Stopwatch {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

uint64_t TrialSeed(uint64_t seed, uint64_t trial) {
  return CounterRng(seed, trial + 1)();
}

Modifier RandomModifier(const ModifierConfig& cfg, CounterRng& rng) {
  const unsigned low = std::min(cfg.m2_bits, 64u);
  const unsigned high = cfg.m2_bits > 64 ? cfg.m2_bits - 64 : 0;
  const uint64_t m1 = rng.Bits(cfg.m1_bits);
  const uint64_t m2_low = rng.Bits(low);
  return Modifier::FromParts(cfg.m1_bits, m1, m2_low, rng.Bits(high));
}

}  // namespace

ModifierConfig DetectionConfig(unsigned m1_bits) {
  return ModifierConfig{m1_bits, 48, 64 - m1_bits, 0, 0};
}

double ChiSquareUniformPValue(const std::vector<uint64_t>& counts) {
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  if (total == 0 || counts.size() < 2) return 1.0;
  const double expected =
      static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0;
  for (uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  const double dof = static_cast<double>(counts.size() - 1);
  return boost::math::gamma_q(dof / 2, stat / 2);
}

Result<ExperimentReport> DetectionRate(const DetectionSpec& spec) {
  if (spec.m1_bits < 1 || spec.m1_bits > 18) {
    return MakeError(ErrorCode::kInvalidArgument, "m1_bits must lie in [1, 18]");
  }
  const double p = std::ldexp(1.0, -static_cast<int>(spec.m1_bits));
  if (static_cast<double>(spec.trials) * p < 50) {
    return MakeError(ErrorCode::kUnderPowered,
                     "trials * 2^-m1 must be at least 50 (need " +
                         std::to_string(static_cast<uint64_t>(50 / p)) +
                         " trials)");
  }
  Stopwatch clock;
  const ModifierConfig cfg = DetectionConfig(spec.m1_bits);
  Result<SealEngine> made = SealEngine::Create(spec.cipher, cfg);
  if (!made.ok()) return made.error();
  const SealEngine& engine = made.value();

  CounterRng setup(spec.seed);
  const Key128 key{setup(), setup()};
  const Modifier mod = RandomModifier(cfg, setup);
  const uint64_t ptr = setup() & engine.layout().address_mask;
  const SealEngine::Context ctx = engine.MakeContext(key, mod);
  const uint64_t sealed = engine.SealRaw(ctx, ptr);
  const unsigned bucket_shift = cfg.addr_width - 4;

  ExperimentReport r;
  r.kind = "detection";
  r.seed = spec.seed;
  r.trials = spec.trials;
  std::vector<uint64_t> buckets(16, 0);
  for (uint64_t t = 0; t < spec.trials; ++t) {
    CounterRng rng(spec.seed, t + 1);
    uint64_t q = 0;
    switch (spec.mode) {
      case ForgeryMode::kRandomCiphertext:
        q = engine.UnsealRaw(ctx, rng());
        break;
      case ForgeryMode::kWrongModifier: {
        Modifier wrong = RandomModifier(cfg, rng);
        while (wrong == mod) wrong = RandomModifier(cfg, rng);
        q = engine.UnsealRaw(engine.MakeContext(key, wrong), sealed);
        break;
      }
      case ForgeryMode::kBitFlip: {
        // A fixed sealed word admits only 64 single-bit forgeries, so each
        // trial seals a fresh pointer.
        const uint64_t victim =
            engine.SealRaw(ctx, rng() & engine.layout().address_mask);
        q = engine.UnsealRaw(ctx, victim ^ (1ULL << rng.Below(64)));
        break;
      }
    }
    if (engine.IsCanonical(q)) {
      ++r.events;
      ++buckets[(q >> bucket_shift) & 0xf];
    }
  }
  const double n = static_cast<double>(spec.trials);
  r.estimate = static_cast<double>(r.events) / n;
  r.std_error = std::sqrt(r.estimate * (1 - r.estimate) / n);
  r.expected = p;
  r.tolerance = 3 * std::sqrt(p * (1 - p) / n);
  r.passed = std::fabs(r.estimate - p) <= r.tolerance;
  for (uint64_t b = 0; b < buckets.size(); ++b) r.histogram[b] = buckets[b];
  r.extra.push_back({"m1_bits", static_cast<double>(spec.m1_bits)});
  r.extra.push_back({"detection_probability", 1 - r.estimate});
  r.extra.push_back({"uniformity_p_value", ChiSquareUniformPValue(buckets)});
  r.wall_time_seconds = clock.Seconds();
  return r;
}

Result<BitflipResult> BitflipAttack(const ModifierConfig& cfg, uint64_t mask,
                                    uint64_t seed, bool validated,
                                    CipherKind cipher) {
  if (cfg.addr_width > 64 || cfg.addr_width + cfg.tag_bits > 64 ||
      cfg.m1_bits > 64 - cfg.tag_bits) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "layout cannot be formed even without validation");
  }
  SealEngine engine = SealEngine::CreateUnchecked(cipher, cfg);
  if (validated) {
    Result<SealEngine> checked = SealEngine::Create(cipher, cfg);
    if (!checked.ok()) return checked.error();
    engine = std::move(checked).value();
  }
  const PointerLayout& layout = engine.layout();

  CounterRng rng(seed);
  const Key128 key{rng(), rng()};
  const uint64_t victim_ptr =
      (rng() & layout.address_mask) | (rng() & layout.tag_mask);
  const uint64_t m1_v = rng.Bits(cfg.m1_bits);
  const uint64_t m2_low = rng.Bits(std::min(cfg.m2_bits, 64u));
  const uint64_t m2_high = rng.Bits(cfg.m2_bits > 64 ? cfg.m2_bits - 64 : 0);
  const Modifier victim_mod =
      Modifier::FromParts(cfg.m1_bits, m1_v, m2_low, m2_high);
  const uint64_t sealed =
      engine.SealRaw(engine.MakeContext(key, victim_mod), victim_ptr);

  // Translate X into an m1 difference; bits outside the placement cannot be
  // reached through the modifier.
  uint64_t m1_delta = 0;
  for (unsigned i = 0; i < cfg.m1_bits; ++i) {
    if ((mask >> layout.m1_positions[i]) & 1) m1_delta |= 1ULL << i;
  }
  const Modifier attacker_mod =
      Modifier::FromParts(cfg.m1_bits, m1_v ^ m1_delta, m2_low, m2_high);
  const uint64_t q =
      engine.UnsealRaw(engine.MakeContext(key, attacker_mod), sealed);

  BitflipResult r;
  r.mask = mask;
  r.expressible = (mask & ~layout.m1_mask) == 0;
  r.tuple_valid = q == (victim_ptr ^ mask);
  r.unseal_accepted = engine.IsCanonical(q);
  r.yielded = q;
  r.flips_address_bits = (mask & layout.address_mask) != 0;
  r.address_hijacked =
      r.tuple_valid && r.unseal_accepted && r.flips_address_bits;
  return r;
}

Result<BruteForceReports> BruteForceCompare(const BruteForceSpec& spec) {
  if (spec.pac_bits > 16) {
    return MakeError(ErrorCode::kInvalidArgument, "pac_bits must be <= 16");
  }
  vm::VmConfig pac_vm;
  pac_vm.scheme = vm::Scheme::kPac;
  pac_vm.cipher = spec.cipher;
  pac_vm.lippen = spec.lippen;
  pac_vm.pac.pac_bits = spec.pac_bits;
  pac_vm.pac.addr_width = spec.lippen.addr_width;
  pac_vm.pac.tag_bits = spec.lippen.tag_bits;
  pac_vm.pac.kind = spec.cipher;
  vm::VmConfig lippen_vm = pac_vm;
  lippen_vm.scheme = vm::Scheme::kLippen;

  BruteForceReports out;
  {
    Stopwatch clock;
    ExperimentReport& r = out.pac;
    r.kind = "brute_force_pac";
    r.seed = spec.seed;
    r.trials = spec.pac_trials;
    double sum = 0;
    double sum_sq = 0;
    for (uint64_t t = 0; t < spec.pac_trials; ++t) {
      Result<vm::GuessResult> g = vm::GuessLoopOnReturnSlot(
          pac_vm, kBruteForceTarget, spec.max_guesses, TrialSeed(spec.seed, t));
      if (!g.ok()) return g.error();
      if (!g->success) continue;
      ++r.events;
      const double c = static_cast<double>(g->guess_count);
      sum += c;
      sum_sq += c * c;
      ++r.histogram[g->guess_count];
    }
    const double n = static_cast<double>(std::max<uint64_t>(r.events, 1));
    r.estimate = sum / n;
    const double var =
        r.events > 1 ? (sum_sq - sum * sum / n) / (n - 1) : 0.0;
    r.std_error = std::sqrt(var / n);
    r.expected = (std::ldexp(1.0, static_cast<int>(spec.pac_bits)) + 1) / 2;
    r.tolerance = 0.05 * r.expected;
    r.passed = r.events == spec.pac_trials && spec.pac_trials > 0 &&
               std::fabs(r.estimate - r.expected) <= r.tolerance;
    r.extra.push_back({"pac_bits", static_cast<double>(spec.pac_bits)});
    r.extra.push_back({"candidate_space",
                       std::ldexp(1.0, static_cast<int>(spec.pac_bits))});
    r.extra.push_back(
        {"failures", static_cast<double>(spec.pac_trials - r.events)});
    r.wall_time_seconds = clock.Seconds();
  }
  {
    Stopwatch clock;
    ExperimentReport& r = out.lippen;
    r.kind = "brute_force_lippen";
    r.seed = spec.seed;
    r.trials = spec.lippen_trials;
    uint64_t total_guesses = 0;
    for (uint64_t t = 0; t < spec.lippen_trials; ++t) {
      Result<vm::GuessResult> g = vm::GuessLoopOnReturnSlot(
          lippen_vm, kBruteForceTarget, spec.max_guesses,
          TrialSeed(spec.seed ^ 0x6c697070656eULL, t));
      if (!g.ok()) return g.error();
      total_guesses += g->guess_count;
      if (g->success) {
        ++r.events;
        ++r.histogram[g->guess_count];
      }
    }
    const double n = static_cast<double>(std::max<uint64_t>(spec.lippen_trials, 1));
    r.estimate = static_cast<double>(r.events) / n;
    r.std_error = std::sqrt(r.estimate * (1 - r.estimate) / n);
    r.expected = 0;
    r.tolerance = 0;
    r.passed = r.events == 0;
    r.extra.push_back({"max_guesses", static_cast<double>(spec.max_guesses)});
    r.extra.push_back({"total_guesses", static_cast<double>(total_guesses)});
    r.extra.push_back({"union_bound_success_probability",
                       std::ldexp(static_cast<double>(total_guesses), -64)});
    r.wall_time_seconds = clock.Seconds();
  }
  return out;
}

Result<ExperimentReport> KeyCollisionProbe(const DomainKeyTable& table,
                                           uint64_t probes, uint64_t seed) {
  if (!table.has_config()) {
    return MakeError(ErrorCode::kNoActiveConfig, "table has no modifier config");
  }
  Stopwatch clock;
  ExperimentReport r;
  r.kind = "key_collision";
  r.seed = seed;
  const ModifierConfig& cfg = table.config();
  const std::vector<IssuedDomain> live = table.LiveDomains();
  auto derived_mask = [&cfg](uint64_t m2_low, uint64_t m2_high) {
    return ExpandM2(Modifier::FromParts(cfg.m1_bits, 0, m2_low, m2_high), cfg);
  };

  if (live.size() >= 2 && table.key_width() <= 16) {
    std::vector<Key128> masks;
    for (uint64_t m2 = 0; m2 < (1ULL << cfg.m2_bits); ++m2) {
      masks.push_back(derived_mask(m2, 0));
    }
    for (size_t i = 0; i < live.size(); ++i) {
      for (size_t j = i + 1; j < live.size(); ++j) {
        for (const Key128& ma : masks) {
          const Key128 da = live[i].key ^ ma;
          for (const Key128& mb : masks) {
            ++r.trials;
            if (da == (live[j].key ^ mb)) ++r.events;
          }
        }
      }
    }
    r.extra.push_back({"exhaustive", 1});
  } else if (live.size() >= 2) {
    CounterRng rng(seed);
    const unsigned low = std::min(cfg.m2_bits, 64u);
    const unsigned high = cfg.m2_bits > 64 ? cfg.m2_bits - 64 : 0;
    for (uint64_t t = 0; t < probes; ++t) {
      const uint64_t i = rng.Below(live.size());
      uint64_t j = rng.Below(live.size() - 1);
      if (j >= i) ++j;
      const Key128 ma = derived_mask(rng.Bits(low), rng.Bits(high));
      const Key128 mb = derived_mask(rng.Bits(low), rng.Bits(high));
      ++r.trials;
      if ((live[i].key ^ ma) == (live[j].key ^ mb)) ++r.events;
    }
    r.extra.push_back({"exhaustive", 0});
  }
  r.extra.push_back({"live_domains", static_cast<double>(live.size())});
  r.estimate = r.trials ? static_cast<double>(r.events) /
                              static_cast<double>(r.trials)
                        : 0.0;
  r.expected = 0;
  r.passed = r.events == 0;
  r.wall_time_seconds = clock.Seconds();
  return r;
}

Result<ExperimentReport> AvalancheExperiment(CipherKind cipher,
                                             uint64_t samples, bool flip_key,
                                             uint64_t seed) {
  Stopwatch clock;
  Result<AvalancheStats> stats = CipherAvalanche(
      cipher, samples, flip_key ? FlipTarget::kKey : FlipTarget::kPlaintext,
      seed);
  if (!stats.ok()) return stats.error();
  ExperimentReport r;
  r.kind = flip_key ? "avalanche_key" : "avalanche_plaintext";
  r.seed = seed;
  r.trials = samples;
  r.estimate = stats->mean;
  r.std_error = stats->stddev / std::sqrt(static_cast<double>(samples));
  r.expected = 32;
  r.tolerance = 1;
  r.passed = std::fabs(r.estimate - r.expected) <= r.tolerance;
  r.extra.push_back({"stddev", stats->stddev});
  r.wall_time_seconds = clock.Seconds();
  return r;
}

}  // namespace lippen::attack
