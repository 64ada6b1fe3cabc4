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

#ifndef LIPPEN_KAT_H_
#define LIPPEN_KAT_H_

#include <string>
#include <string_view>
#include <vector>

#include "lippen/cipher.h"
#include "lippen/status.h"

namespace lippen {

struct KatVector {
  CipherKind kind = CipherKind::kPrince;
  Key128 key;
  Block64 plaintext = 0;
  Block64 ciphertext = 0;
  int line = 0;
};

// Line format: "kind k0 k1 pt ct", each value exactly 16 lowercase hex
// digits. Blank lines and lines starting with '#' are skipped.
Result<std::vector<KatVector>> ParseKatVectors(std::string_view text);
Result<std::vector<KatVector>> LoadKatFile(const std::string& path);

// The published vectors for both ciphers, compiled in.
const std::vector<KatVector>& BuiltinKatVectors();

struct KatCheck {
  Block64 encrypted = 0;
  Block64 decrypted = 0;
  bool passed = false;
};

// Checks both directions of one vector.
KatCheck RunKat(const KatVector& v);

}  // namespace lippen

#endif  // LIPPEN_KAT_H_
