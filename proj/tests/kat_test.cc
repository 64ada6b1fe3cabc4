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

#include "lippen/kat.h"

#include <string>

#include "gtest/gtest.h"
#include "reference_prince.h"

namespace lippen {
namespace {

TEST(KatTest, BuiltinVectorsPass) {
  const auto& vectors = BuiltinKatVectors();
  ASSERT_EQ(vectors.size(), 10u);
  for (const KatVector& v : vectors) {
    const KatCheck c = RunKat(v);
    EXPECT_TRUE(c.passed) << CipherKindName(v.kind) << " " << std::hex
                          << v.plaintext << " got " << c.encrypted;
  }
}

// The independent reference agrees with every published vector.
TEST(KatTest, ReferenceAgrees) {
  for (const KatVector& v : BuiltinKatVectors()) {
    const uint64_t ct =
        v.kind == CipherKind::kPrince
            ? reference::Prince(v.plaintext, v.key.k0, v.key.k1)
            : reference::PrinceV2(v.plaintext, v.key.k0, v.key.k1);
    EXPECT_EQ(ct, v.ciphertext);
  }
}

TEST(KatTest, FileMatchesBuiltin) {
  Result<std::vector<KatVector>> file =
      LoadKatFile(std::string(LIPPEN_DATA_DIR) + "/kat_vectors.txt");
  ASSERT_TRUE(file.ok()) << file.error().message;
  const auto& builtin = BuiltinKatVectors();
  ASSERT_EQ(file->size(), builtin.size());
  for (size_t i = 0; i < builtin.size(); ++i) {
    EXPECT_EQ((*file)[i].kind, builtin[i].kind);
    EXPECT_EQ((*file)[i].key, builtin[i].key);
    EXPECT_EQ((*file)[i].plaintext, builtin[i].plaintext);
    EXPECT_EQ((*file)[i].ciphertext, builtin[i].ciphertext);
  }
}

TEST(KatTest, ParserErrors) {
  EXPECT_EQ(ParseKatVectors("aes 0 0 0 0\n").code(),
            ErrorCode::kInvalidArgument);
  EXPECT_FALSE(ParseKatVectors("prince 0000000000000000\n").ok());
  EXPECT_FALSE(ParseKatVectors("prince 0 0 0 0\n").ok());
  Result<std::vector<KatVector>> ok = ParseKatVectors(
      "# comment\n\n"
      "prince 0000000000000000 0000000000000000 0000000000000000 "
      "818665aa0d02dfda\n");
  ASSERT_TRUE(ok.ok());
  ASSERT_EQ(ok->size(), 1u);
  EXPECT_EQ(ok->front().line, 3);
}

TEST(KatTest, DetectsWrongCiphertext) {
  KatVector v = BuiltinKatVectors().front();
  v.ciphertext ^= 1;
  EXPECT_FALSE(RunKat(v).passed);
}

}  // namespace
}  // namespace lippen
