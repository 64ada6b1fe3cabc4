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

#include "lippen/hex.h"

#include "gtest/gtest.h"

namespace lippen {
namespace {

TEST(HexTest, StrictBlock) {
  EXPECT_EQ(ParseHex64("818665aa0d02dfda", HexMode::kStrict),
            0x818665aa0d02dfdaULL);
  EXPECT_FALSE(ParseHex64("818665AA0D02DFDA", HexMode::kStrict));
  EXPECT_FALSE(ParseHex64("0x818665aa0d02dfda", HexMode::kStrict));
  EXPECT_FALSE(ParseHex64("1234", HexMode::kStrict));
  EXPECT_FALSE(ParseHex64("818665aa0d02dfda0", HexMode::kStrict));
  EXPECT_FALSE(ParseHex64("818665aa0d02dfdg", HexMode::kStrict));
}

TEST(HexTest, LenientBlock) {
  EXPECT_EQ(ParseHex64("0x401234", HexMode::kLenient), 0x401234u);
  EXPECT_EQ(ParseHex64("ABCdef", HexMode::kLenient), 0xabcdefu);
  EXPECT_FALSE(ParseHex64("", HexMode::kLenient));
  EXPECT_FALSE(ParseHex64("0x", HexMode::kLenient));
}

TEST(HexTest, KeyIsK0First) {
  const auto k = ParseKeyHex("0123456789abcdeffedcba9876543210",
                             HexMode::kStrict);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->k0, 0x0123456789abcdefULL);
  EXPECT_EQ(k->k1, 0xfedcba9876543210ULL);
  EXPECT_EQ(FormatKey(*k), "0123456789abcdeffedcba9876543210");
  EXPECT_FALSE(ParseKeyHex("0123456789abcdef", HexMode::kStrict));
  EXPECT_EQ(ParseKeyHex("0x5", HexMode::kLenient), (Key128{0, 5}));
}

TEST(HexTest, Modifier) {
  const auto m = ParseModifierHex(
      "000000000000000100000000000000020000000000000003", HexMode::kStrict);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->limbs[0], 3u);
  EXPECT_EQ(m->limbs[1], 2u);
  EXPECT_EQ(m->limbs[2], 1u);
  EXPECT_FALSE(ParseModifierHex("abc", HexMode::kStrict));
  EXPECT_EQ(ParseModifierHex("abc", HexMode::kLenient)->limbs[0], 0xabcu);
}

TEST(HexTest, NumbersAndFormatting) {
  EXPECT_EQ(ParseNumber("64"), 64u);
  EXPECT_EQ(ParseNumber("0x7fff0008"), 0x7fff0008u);
  EXPECT_FALSE(ParseNumber("12a"));
  EXPECT_FALSE(ParseNumber(""));
  EXPECT_EQ(FormatHex64(0x401234), "0000000000401234");
}

}  // namespace
}  // namespace lippen
