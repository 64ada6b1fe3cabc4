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

#include "lippen/vm.h"

#include <string>

#include "gtest/gtest.h"

namespace lippen::vm {
namespace {

Outcome RunText(const std::string& text, Scheme scheme,
                const char* policy = "parts", uint64_t seed = 1,
                unsigned pac_bits = 16) {
  Result<Scenario> scn = ParseScenario(text);
  EXPECT_TRUE(scn.ok()) << (scn.ok() ? "" : scn.error().message);
  VmConfig cfg;
  cfg.scheme = scheme;
  cfg.policy = *PolicyByName(policy);
  cfg.seed = seed;
  cfg.pac.pac_bits = pac_bits;
  Result<Outcome> out = RunScenario(scn.value(), cfg);
  EXPECT_TRUE(out.ok()) << (out.ok() ? "" : out.error().message);
  return out.ok() ? out.value() : Outcome{};
}

constexpr char kStackSmash[] =
    "CALL f1 64\n"
    "ATTACKER_WRITE 0x7fff0008 0x0000000000401234\n"
    "RET\n";

constexpr char kReplay[] =
    "CALL outer 32\n"
    "CALL inner 48\n"
    "ATTACKER_COPY 0x7fff0008 0x7ffeffd8\n"
    "RET\n";

// Frame of main spans [0x7ffeffc0, 0x7fff0000); slot i is at base + 8i.
constexpr char kDataSwap[] =
    "CALL main 64\n"
    "STORE_PTR 0 0x402000 7\n"
    "STORE_PTR 1 0x403000 7\n"
    "ATTACKER_COPY 0x7ffeffc0 0x7ffeffc8\n"
    "DEREF 1\n";

TEST(ParseScenarioTest, AcceptsCommentsAndNumbers) {
  Result<Scenario> s = ParseScenario(
      "# header\n\nCALL f 64  # trailing\nATTACKER_FLIP 0x10 255\nRET\n");
  ASSERT_TRUE(s.ok());
  ASSERT_EQ(s->events.size(), 3u);
  EXPECT_EQ(s->events[0].kind, EventKind::kCall);
  EXPECT_EQ(s->events[0].label, "f");
  EXPECT_EQ(s->events[0].a, 64u);
  EXPECT_EQ(s->events[1].a, 0x10u);
  EXPECT_EQ(s->events[1].b, 255u);
  EXPECT_EQ(s->events[2].line, 5);
}

TEST(ParseScenarioTest, RejectsMalformedLines) {
  EXPECT_EQ(ParseScenario("JUMP 4\n").code(), ErrorCode::kMalformedScenario);
  EXPECT_EQ(ParseScenario("CALL f\n").code(), ErrorCode::kMalformedScenario);
  EXPECT_EQ(ParseScenario("RET 1\n").code(), ErrorCode::kMalformedScenario);
  EXPECT_EQ(ParseScenario("ATTACKER_WRITE 0xzz 1\n").code(),
            ErrorCode::kMalformedScenario);
}

TEST(PolicyTest, PresetsAndExplicitForm) {
  EXPECT_EQ(PolicyByName("parts")->return_modifier,
            ReturnModifierRule::kStackPointer);
  EXPECT_EQ(PolicyByName("pactight")->data_modifier,
            DataModifierRule::kLocationPlusTag);
  EXPECT_EQ(PolicyByName("pacstack")->return_modifier,
            ReturnModifierRule::kChainedPreviousReturn);
  EXPECT_EQ(PolicyByName("zero")->return_modifier, ReturnModifierRule::kZero);
  const auto p = PolicyByName("return=zero,data=type");
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->return_modifier, ReturnModifierRule::kZero);
  EXPECT_EQ(p->data_modifier, DataModifierRule::kTypeId);
  EXPECT_FALSE(PolicyByName("return=lr,data=type").has_value());
  EXPECT_FALSE(PolicyByName("nonsense").has_value());
}

TEST(VmTest, EmptyScenarioIsBenign) {
  for (Scheme s : {Scheme::kNone, Scheme::kPac, Scheme::kLippen}) {
    const Outcome o = RunText("", s);
    EXPECT_EQ(o.verdict, Verdict::kBenign);
    EXPECT_EQ(o.event_index, -1);
  }
}

TEST(VmTest, FirstReturnSlotAddress) {
  VmConfig cfg;
  Machine m = Machine::Create(cfg).value();
  ASSERT_TRUE(m.Run(ParseScenario("CALL f 64\n").value()).ok());
  EXPECT_EQ(m.CurrentReturnSlot(), 0x7fff0008u);
  EXPECT_EQ(m.sp(), 0x7fff0000u - 64);
  EXPECT_NE(m.Read(0x7fff0008), kCodeBase + 16);  // stored sealed
}

TEST(VmTest, StackSmash) {
  const Outcome none = RunText(kStackSmash, Scheme::kNone);
  EXPECT_EQ(none.verdict, Verdict::kHijacked);
  EXPECT_EQ(none.transfer_address, 0x401234u);
  EXPECT_EQ(none.event_index, 2);
  EXPECT_EQ(RunText(kStackSmash, Scheme::kPac).verdict, Verdict::kDetected);
  EXPECT_EQ(RunText(kStackSmash, Scheme::kLippen).verdict, Verdict::kDetected);
}

TEST(VmTest, CrossContextReplayNeedsAContextModifier) {
  for (Scheme s : {Scheme::kPac, Scheme::kLippen}) {
    EXPECT_EQ(RunText(kReplay, s, "zero").verdict, Verdict::kHijacked);
    EXPECT_EQ(RunText(kReplay, s, "parts").verdict, Verdict::kDetected);
    EXPECT_EQ(RunText(kReplay, s, "pacstack").verdict, Verdict::kDetected);
  }
  EXPECT_EQ(RunText(kReplay, Scheme::kNone, "parts").verdict,
            Verdict::kHijacked);
}

TEST(VmTest, DataPointerSubstitution) {
  // Same type id: the type modifier cannot tell the two pointers apart.
  EXPECT_EQ(RunText(kDataSwap, Scheme::kLippen, "parts").verdict,
            Verdict::kHijacked);
  EXPECT_EQ(RunText(kDataSwap, Scheme::kLippen, "pactight").verdict,
            Verdict::kDetected);
  EXPECT_EQ(RunText(kDataSwap, Scheme::kPac, "pactight").verdict,
            Verdict::kDetected);
  EXPECT_EQ(RunText(kDataSwap, Scheme::kNone, "pactight").verdict,
            Verdict::kHijacked);
}

TEST(VmTest, BitFlipOnDataPointer) {
  const char* text =
      "CALL main 64\n"
      "STORE_PTR 0 0x402000 7\n"
      "ATTACKER_FLIP 0x7ffeffc0 0x1000\n"
      "DEREF 0\n";
  const Outcome none = RunText(text, Scheme::kNone);
  EXPECT_EQ(none.verdict, Verdict::kHijacked);
  EXPECT_EQ(none.transfer_address, 0x403000u);
  EXPECT_EQ(RunText(text, Scheme::kLippen).verdict, Verdict::kDetected);
}

TEST(VmTest, SwitchingDomainsInvalidatesPointers) {
  const char* text =
      "CALL f 32\n"
      "SWITCH_DOMAIN 1\n"
      "RET\n";
  EXPECT_EQ(RunText(text, Scheme::kLippen).verdict, Verdict::kDetected);
  EXPECT_EQ(RunText(text, Scheme::kPac).verdict, Verdict::kDetected);
  EXPECT_EQ(RunText(text, Scheme::kNone).verdict, Verdict::kBenign);
}

TEST(VmTest, GuessLoopBreaksShortPacButNotLippen) {
  const char* text =
      "CALL victim 64\n"
      "ATTACKER_GUESS_LOOP 0x7fff0008 10000 0x0000414141414140\n"
      "RET\n";
  const Outcome pac = RunText(text, Scheme::kPac, "parts", 5, 8);
  EXPECT_EQ(pac.verdict, Verdict::kHijacked);
  EXPECT_GE(pac.guess_count, 1u);
  EXPECT_LE(pac.guess_count, 256u);
  EXPECT_EQ(pac.transfer_address, 0x0000414141414140u);

  const Outcome lippen = RunText(text, Scheme::kLippen, "parts", 5);
  EXPECT_EQ(lippen.verdict, Verdict::kBenign);
  EXPECT_EQ(lippen.guess_count, 10000u);
  EXPECT_EQ(lippen.event_index, -1);
}

TEST(VmTest, TransparencyWithoutAttacker) {
  const char* text =
      "CALL main 32\n"
      "STORE_PTR 0 0x402000 7\n"
      "CALL helper 16\n"
      "STORE_PTR 1 0x403000 9\n"
      "LOAD_PTR 1\n"
      "DEREF 1\n"
      "RET\n"
      "DEREF 0\n"
      "RET\n";
  for (const char* policy : {"parts", "pacstack", "pactight", "zero"}) {
    const Outcome none = RunText(text, Scheme::kNone, policy, 9);
    const Outcome pac = RunText(text, Scheme::kPac, policy, 9);
    const Outcome lippen = RunText(text, Scheme::kLippen, policy, 9);
    EXPECT_EQ(none.verdict, Verdict::kBenign);
    EXPECT_EQ(pac.verdict, Verdict::kBenign);
    EXPECT_EQ(lippen.verdict, Verdict::kBenign);
    EXPECT_EQ(none.plain_memory, pac.plain_memory) << policy;
    EXPECT_EQ(none.plain_memory, lippen.plain_memory) << policy;
  }
}

TEST(VmTest, DeterministicPerSeed) {
  const Outcome a = RunText(kStackSmash, Scheme::kLippen, "parts", 3);
  const Outcome b = RunText(kStackSmash, Scheme::kLippen, "parts", 3);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.plain_memory, b.plain_memory);
  EXPECT_EQ(a.event_index, b.event_index);
}

TEST(VmTest, SealedMemoryDependsOnSeed) {
  VmConfig cfg;
  Machine a = Machine::Create(cfg).value();
  cfg.seed = 1;
  Machine b = Machine::Create(cfg).value();
  const Scenario scn = ParseScenario("CALL f 16\n").value();
  ASSERT_TRUE(a.Run(scn).ok());
  ASSERT_TRUE(b.Run(scn).ok());
  EXPECT_NE(a.Read(0x7fff0008), b.Read(0x7fff0008));
}

TEST(VmTest, MalformedRuns) {
  VmConfig cfg;
  EXPECT_EQ(RunScenario(ParseScenario("RET\n").value(), cfg).code(),
            ErrorCode::kMalformedScenario);
  EXPECT_EQ(RunScenario(ParseScenario("CALL f 16\nSTORE_PTR 2 1 0\n").value(),
                        cfg)
                .code(),
            ErrorCode::kMalformedScenario);
  EXPECT_EQ(RunScenario(ParseScenario("CALL f 16\nDEREF 0\n").value(), cfg)
                .code(),
            ErrorCode::kMalformedScenario);
  EXPECT_EQ(
      RunScenario(
          ParseScenario("CALL f 16\nSTORE_PTR 0 0xff00000000000000 0\n").value(),
          cfg)
          .code(),
      ErrorCode::kMalformedScenario);
}

TEST(VmTest, ScenarioFilesLoad) {
  for (const char* name : {"stack_smash.scn", "cross_context_replay.scn",
                           "no_attacker.scn", "empty.scn"}) {
    EXPECT_TRUE(
        LoadScenarioFile(std::string(LIPPEN_SCENARIO_DIR) + "/" + name).ok())
        << name;
  }
  EXPECT_EQ(LoadScenarioFile("/nonexistent.scn").code(),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace lippen::vm
