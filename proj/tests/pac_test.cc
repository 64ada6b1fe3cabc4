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

#include <cstdint>

#include "gtest/gtest.h"
#include "lippen/random.h"

namespace lippen {
namespace {

constexpr Key128 kKey{0x0123456789abcdefULL, 0xfedcba9876543210ULL};

TEST(PacConfigTest, FieldSitsAboveTag) {
  PacConfig p;
  p.pac_bits = 7;
  p.tag_bits = 4;
  EXPECT_EQ(PacFieldShift(p), 52);
  EXPECT_EQ(PacFieldMask(p), 0x7fULL << 52);
}

TEST(PacConfigTest, Validation) {
  PacConfig p;
  p.pac_bits = 16;
  EXPECT_TRUE(ValidatePacConfig(p).ok());
  p.pac_bits = 17;
  EXPECT_EQ(ValidatePacConfig(p).code(), ErrorCode::kPacTooWide);
  p.pac_bits = 8;
  p.tag_bits = 9;
  EXPECT_EQ(ValidatePacConfig(p).code(), ErrorCode::kPacTooWide);
}

TEST(PacTest, SignAuthRoundtrip) {
  PacConfig p;
  CounterRng rng(30);
  for (int i = 0; i < 1000; ++i) {
    const PlainPointer ptr{rng() & 0x0000ffffffffffffULL};
    const Modifier mod = Modifier::FromU64(rng());
    Result<SealedPointer> s = PacSign(kKey, ptr, mod, p);
    ASSERT_TRUE(s.ok());
    EXPECT_EQ(s->value & 0x0000ffffffffffffULL, ptr.value);
    Result<PlainPointer> back = PacAuth(kKey, s.value(), mod, p);
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(back.value(), ptr);
  }
}

TEST(PacTest, MacIsTruncatedEncryption) {
  PacConfig p;
  p.pac_bits = 11;
  const uint64_t ptr = 0x00007fffdeadbee0ULL;
  const Modifier mod = Modifier::FromParts(16, 0x1234, 0x5678, 0x9abc);
  const uint64_t folded = mod.limbs[0] ^ mod.limbs[1] ^ mod.limbs[2];
  EXPECT_EQ(FoldModifier(mod), folded);
  const uint64_t mac =
      Encrypt(CipherKind::kPrinceV2, kKey, ptr ^ folded) & 0x7ff;
  EXPECT_EQ(PacSign(kKey, PlainPointer{ptr}, mod, p)->value,
            ptr | (mac << 48));
}

TEST(PacTest, ZeroWidthIsIdentity) {
  PacConfig p;
  p.pac_bits = 0;
  EXPECT_EQ(PacSign(kKey, PlainPointer{0x1234}, Modifier{}, p)->value, 0x1234u);
}

TEST(PacTest, NonCanonicalRejected) {
  PacConfig p;
  EXPECT_EQ(PacSign(kKey, PlainPointer{1ULL << 60}, Modifier{}, p).code(),
            ErrorCode::kNonCanonicalPointer);
}

TEST(PacTest, WrongModifierRaisesException) {
  PacConfig p;
  const SealedPointer s =
      PacSign(kKey, PlainPointer{0x401000}, Modifier::FromU64(1), p).value();
  Result<PlainPointer> r = PacAuth(kKey, s, Modifier::FromU64(2), p);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.code(), ErrorCode::kIntegrityException);
}

TEST(PacTest, WrongModifierCorruptsTopBits) {
  PacConfig p;
  p.failure_mode = PacFailureMode::kCorruptTopBits;
  const SealedPointer s =
      PacSign(kKey, PlainPointer{0x401000}, Modifier::FromU64(1), p).value();
  Result<PlainPointer> r = PacAuth(kKey, s, Modifier::FromU64(2), p);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.code(), ErrorCode::kCorruptedPointer);
  EXPECT_EQ(r.error().diagnostic, 0xc000000000401000ULL);
  EXPECT_EQ(r.error().diagnostic ^ 0x401000, kPacErrorFlip | kPacErrorSet);
}

TEST(PacTest, ExactlyOneCodeAuthenticates) {
  PacConfig p;
  p.pac_bits = 8;
  const uint64_t ptr = 0x0000414141414140ULL;
  int hits = 0;
  for (uint64_t code = 0; code < 256; ++code) {
    hits += PacAuthenticates(p, kKey, ptr | (code << 48), 7);
  }
  EXPECT_EQ(hits, 1);
}

}  // namespace
}  // namespace lippen
