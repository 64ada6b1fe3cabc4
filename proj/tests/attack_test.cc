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

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

namespace lippen::attack {
namespace {

TEST(DetectionRateTest, PreconditionsEnforced) {
  DetectionSpec spec;
  spec.m1_bits = 16;
  spec.trials = 1000;
  EXPECT_EQ(DetectionRate(spec).code(), ErrorCode::kUnderPowered);
  spec.m1_bits = 0;
  EXPECT_EQ(DetectionRate(spec).code(), ErrorCode::kInvalidArgument);
  spec.m1_bits = 19;
  EXPECT_EQ(DetectionRate(spec).code(), ErrorCode::kInvalidArgument);
}

TEST(DetectionRateTest, ConfigUsesEveryCheckedBit) {
  const ModifierConfig cfg = DetectionConfig(8);
  EXPECT_TRUE(ValidateConfig(cfg).ok());
  EXPECT_EQ(ComputeLayout(cfg).check_mask, ComputeLayout(cfg).m1_mask);
}

TEST(DetectionRateTest, AcceptanceNearTwoToMinusM1) {
  for (ForgeryMode mode : {ForgeryMode::kRandomCiphertext,
                           ForgeryMode::kWrongModifier,
                           ForgeryMode::kBitFlip}) {
    DetectionSpec spec;
    spec.m1_bits = 8;
    spec.trials = 200'000;
    spec.mode = mode;
    spec.seed = 17;
    const ExperimentReport r = DetectionRate(spec).value();
    EXPECT_TRUE(r.passed) << static_cast<int>(mode) << " " << r.estimate;
    EXPECT_DOUBLE_EQ(r.expected, 1.0 / 256);
  }
}

TEST(DetectionRateTest, UndetectedAddressesLookUniform) {
  DetectionSpec spec;
  spec.m1_bits = 4;
  spec.trials = 200'000;
  spec.seed = 5;
  const ExperimentReport r = DetectionRate(spec).value();
  ASSERT_EQ(r.histogram.size(), 16u);
  double p_value = -1;
  for (const auto& [name, value] : r.extra) {
    if (name == "uniformity_p_value") p_value = value;
  }
  EXPECT_GT(p_value, 0.01);
}

TEST(DetectionRateTest, ReproducibleFromSeed) {
  DetectionSpec spec;
  spec.m1_bits = 4;
  spec.trials = 5000;
  spec.seed = 99;
  const ExperimentReport a = DetectionRate(spec).value();
  const ExperimentReport b = DetectionRate(spec).value();
  EXPECT_EQ(a.events, b.events);
  EXPECT_EQ(a.histogram, b.histogram);
  spec.seed = 100;
  EXPECT_NE(DetectionRate(spec).value().histogram, a.histogram);
}

TEST(ChiSquareTest, KnownValues) {
  EXPECT_DOUBLE_EQ(ChiSquareUniformPValue({10, 10, 10, 10}), 1.0);
  // Statistic 4 with 1 degree of freedom: p = 0.0455.
  EXPECT_NEAR(ChiSquareUniformPValue({60, 40}), 0.0455, 1e-4);
  EXPECT_LT(ChiSquareUniformPValue({100, 0, 0, 0}), 1e-10);
  EXPECT_DOUBLE_EQ(ChiSquareUniformPValue({0, 0}), 1.0);
}

TEST(BitflipAttackTest, ExhaustiveSingleBitMasks) {
  for (const ModifierConfig& cfg :
       {ModifierConfig{18, 48, 48, 0, 2}, ModifierConfig{12, 16, 48, 4, 0},
        ModifierConfig{9, 64, 57, 0, 2}, ModifierConfig{3, 0, 61, 0, 0}}) {
    const uint64_t m1_mask = ComputeLayout(cfg).m1_mask;
    for (int bit = 0; bit < 64; ++bit) {
      const uint64_t mask = 1ULL << bit;
      const BitflipResult r = BitflipAttack(cfg, mask, bit).value();
      const bool inside = (mask & m1_mask) != 0;
      EXPECT_EQ(r.tuple_valid, inside) << "bit " << bit;
      EXPECT_EQ(r.expressible, inside);
      // Every placed m1 bit is a checked bit, so the flipped plaintext is
      // always rejected by the zero check.
      EXPECT_FALSE(r.address_hijacked);
      if (inside) {
        EXPECT_FALSE(r.unseal_accepted);
        EXPECT_FALSE(r.flips_address_bits);
      }
    }
  }
}

TEST(BitflipAttackTest, MultiBitMasksFollowContainment) {
  const ModifierConfig cfg{18, 48, 48, 0, 2};
  const uint64_t m1_mask = ComputeLayout(cfg).m1_mask;
  const uint64_t masks[] = {m1_mask, 0x3, 0xc000000000000003ULL, 0x7,
                            0x0001000000000000ULL | 0x10};
  for (uint64_t mask : masks) {
    const BitflipResult r = BitflipAttack(cfg, mask, 3).value();
    EXPECT_EQ(r.tuple_valid, (mask & ~m1_mask) == 0) << std::hex << mask;
  }
}

TEST(BitflipAttackTest, OverlappingConfigLetsAddressBitThrough) {
  const ModifierConfig overlap{20, 48, 48, 0, 2};
  EXPECT_EQ(ValidateConfig(overlap).code(), ErrorCode::kM1OverlapsAddress);
  EXPECT_EQ(BitflipAttack(overlap, 1ULL << 3, 1).code(),
            ErrorCode::kM1OverlapsAddress);
  const BitflipResult r =
      BitflipAttack(overlap, 1ULL << 3, 1, /*validated=*/false).value();
  EXPECT_TRUE(r.tuple_valid);
  EXPECT_TRUE(r.unseal_accepted);
  EXPECT_TRUE(r.flips_address_bits);
  EXPECT_TRUE(r.address_hijacked);
  // An address bit outside the spilled placement is still caught.
  const BitflipResult miss =
      BitflipAttack(overlap, 1ULL << 4, 1, /*validated=*/false).value();
  EXPECT_FALSE(miss.tuple_valid);
  EXPECT_FALSE(miss.address_hijacked);
}

TEST(BruteForceTest, PacMeanAndLippenZero) {
  BruteForceSpec spec;
  spec.pac_bits = 6;
  spec.pac_trials = 4000;
  spec.lippen_trials = 3;
  spec.max_guesses = 20000;
  spec.seed = 4;
  const BruteForceReports r = BruteForceCompare(spec).value();
  EXPECT_DOUBLE_EQ(r.pac.expected, 32.5);
  EXPECT_TRUE(r.pac.passed) << r.pac.estimate;
  EXPECT_EQ(r.pac.events, 4000u);
  uint64_t total = 0;
  for (const auto& [guesses, count] : r.pac.histogram) {
    EXPECT_GE(guesses, 1u);
    EXPECT_LE(guesses, 64u);
    total += count;
  }
  EXPECT_EQ(total, 4000u);
  EXPECT_EQ(r.lippen.events, 0u);
  EXPECT_TRUE(r.lippen.passed);
}

TEST(BruteForceTest, RejectsWidePac) {
  BruteForceSpec spec;
  spec.pac_bits = 17;
  EXPECT_EQ(BruteForceCompare(spec).code(), ErrorCode::kInvalidArgument);
}

TEST(AvalancheExperimentTest, ReportsMean) {
  const ExperimentReport r =
      AvalancheExperiment(CipherKind::kPrinceV2, 2000, false, 1).value();
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.estimate, 32, 1);
  EXPECT_EQ(AvalancheExperiment(CipherKind::kPrince, 10, true, 1).code(),
            ErrorCode::kSamplesTooSmall);
}

}  // namespace
}  // namespace lippen::attack
