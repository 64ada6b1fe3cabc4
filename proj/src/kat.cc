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

#include <fstream>
#include <optional>
#include <sstream>

#include "lippen/hex.h"

namespace lippen {

Result<std::vector<KatVector>> ParseKatVectors(std::string_view text) {
  std::vector<KatVector> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind) || kind[0] == '#') continue;
    const std::string where = "line " + std::to_string(line_no);
    std::optional<CipherKind> parsed_kind = ParseCipherKind(kind);
    if (!parsed_kind) {
      return MakeError(ErrorCode::kInvalidArgument,
                       where + ": unknown cipher '" + kind + "'");
    }
    uint64_t v[4];
    for (uint64_t& slot : v) {
      std::string word;
      if (!(fields >> word)) {
        return MakeError(ErrorCode::kInvalidArgument,
                         where + ": expected 5 fields");
      }
      std::optional<uint64_t> h = ParseHex64(word, HexMode::kStrict);
      if (!h) {
        return MakeError(ErrorCode::kInvalidArgument,
                         where + ": malformed hex '" + word + "'");
      }
      slot = *h;
    }
    std::string trailing;
    if (fields >> trailing) {
      return MakeError(ErrorCode::kInvalidArgument,
                       where + ": trailing field '" + trailing + "'");
    }
    out.push_back(KatVector{*parsed_kind, Key128{v[0], v[1]}, v[2], v[3],
                            line_no});
  }
  return out;
}

Result<std::vector<KatVector>> LoadKatFile(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    return MakeError(ErrorCode::kInvalidArgument, "cannot open " + path);
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  return ParseKatVectors(buffer.str());
}

const std::vector<KatVector>& BuiltinKatVectors() {
  static const std::vector<KatVector> kVectors = {
      {CipherKind::kPrince, {0x0, 0x0}, 0x0, 0x818665aa0d02dfdaULL},
      {CipherKind::kPrince, {0x0, 0x0}, 0xffffffffffffffffULL,
       0x604ae6ca03c20adaULL},
      {CipherKind::kPrince, {0xffffffffffffffffULL, 0x0}, 0x0,
       0x9fb51935fc3df524ULL},
      {CipherKind::kPrince, {0x0, 0xffffffffffffffffULL}, 0x0,
       0x78a54cbe737bb7efULL},
      {CipherKind::kPrince, {0x0, 0xfedcba9876543210ULL}, 0x0123456789abcdefULL,
       0xae25ad3ca8fa9ccfULL},
      {CipherKind::kPrinceV2, {0x0, 0x0}, 0x0, 0x0125fc7359441690ULL},
      {CipherKind::kPrinceV2, {0x0, 0x0}, 0xffffffffffffffffULL,
       0x832bd46f108e7857ULL},
      {CipherKind::kPrinceV2, {0xffffffffffffffffULL, 0x0}, 0x0,
       0xee873b2ec447944dULL},
      {CipherKind::kPrinceV2, {0x0, 0xffffffffffffffffULL}, 0x0,
       0x0ac6f9cd6e6f275dULL},
      {CipherKind::kPrinceV2, {0x0123456789abcdefULL, 0xfedcba9876543210ULL},
       0x0123456789abcdefULL, 0x603cd95fa72a8704ULL},
  };
  return kVectors;
}

KatCheck RunKat(const KatVector& v) {
  KatCheck c;
  c.encrypted = Encrypt(v.kind, v.key, v.plaintext);
  c.decrypted = Decrypt(v.kind, v.key, v.ciphertext);
  c.passed = c.encrypted == v.ciphertext && c.decrypted == v.plaintext;
  return c;
}

}  // namespace lippen
