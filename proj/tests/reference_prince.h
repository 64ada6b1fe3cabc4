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

// Straightforward nibble-array PRINCE / PRINCEv2, written independently of
// the table-driven library code. Test use only; slow.

#ifndef LIPPEN_TESTS_REFERENCE_PRINCE_H_
#define LIPPEN_TESTS_REFERENCE_PRINCE_H_

#include <array>
#include <cstdint>

namespace lippen::reference {

using Nibbles = std::array<int, 16>;

inline constexpr int kSbox[16] = {0xb, 0xf, 0x3, 0x2, 0xa, 0xc, 0x9, 0x1,
                                  0x6, 0x7, 0x8, 0x0, 0xe, 0x5, 0xd, 0x4};
inline constexpr uint64_t kRc[12] = {
    0x0000000000000000ULL, 0x13198a2e03707344ULL, 0xa4093822299f31d0ULL,
    0x082efa98ec4e6c89ULL, 0x452821e638d01377ULL, 0xbe5466cf34e90c6cULL,
    0x7ef84f78fd955cb1ULL, 0x85840851f1ac43aaULL, 0xc882d32f25323c54ULL,
    0x64a51195e0e3610dULL, 0xd3b5a399ca0c2399ULL, 0xc0ac29b7c97c50ddULL};
inline constexpr uint64_t kAlpha = 0xc0ac29b7c97c50ddULL;
inline constexpr uint64_t kBeta = 0x3f84d5b5b5470917ULL;
inline constexpr int kPerm[16] = {0, 5, 10, 15, 4, 9, 14, 3,
                                  8, 13, 2, 7, 12, 1, 6, 11};

inline Nibbles Split(uint64_t x) {
  Nibbles n{};
  for (int i = 0; i < 16; ++i) n[i] = (x >> (60 - 4 * i)) & 0xf;
  return n;
}

inline uint64_t Join(const Nibbles& n) {
  uint64_t x = 0;
  for (int v : n) x = (x << 4) | static_cast<uint64_t>(v);
  return x;
}

inline uint64_t S(uint64_t x) {
  Nibbles n = Split(x);
  for (int& v : n) v = kSbox[v];
  return Join(n);
}

inline uint64_t SInv(uint64_t x) {
  Nibbles n = Split(x);
  for (int& v : n) {
    for (int i = 0; i < 16; ++i) {
      if (kSbox[i] == v) {
        v = i;
        break;
      }
    }
  }
  return Join(n);
}

// Bit i counts from the most significant bit.
inline int Bit(uint64_t x, int i) { return (x >> (63 - i)) & 1; }

inline uint64_t MPrime(uint64_t x) {
  const int which[4] = {0, 1, 1, 0};
  uint64_t out = 0;
  for (int c = 0; c < 4; ++c) {
    for (int row = 0; row < 16; ++row) {
      int acc = 0;
      for (int col = 0; col < 16; ++col) {
        const int i = row / 4, j = col / 4, a = row % 4, b = col % 4;
        const int k = (i + j + which[c]) % 4;
        if (a == b && a != k) acc ^= Bit(x, 16 * c + col);
      }
      out = (out << 1) | static_cast<uint64_t>(acc);
    }
  }
  return out;
}

inline uint64_t SR(uint64_t x) {
  const Nibbles n = Split(x);
  Nibbles o{};
  for (int i = 0; i < 16; ++i) o[i] = n[kPerm[i]];
  return Join(o);
}

inline uint64_t SRInv(uint64_t x) {
  const Nibbles n = Split(x);
  Nibbles o{};
  for (int i = 0; i < 16; ++i) o[kPerm[i]] = n[i];
  return Join(o);
}

inline uint64_t M(uint64_t x) { return SR(MPrime(x)); }
inline uint64_t MInv(uint64_t x) { return MPrime(SRInv(x)); }

inline uint64_t Rotr1(uint64_t x) { return (x >> 1) | (x << 63); }

inline uint64_t Prince(uint64_t p, uint64_t k0, uint64_t k1) {
  const uint64_t k0p = Rotr1(k0) ^ (k0 >> 63);
  uint64_t s = p ^ k0 ^ k1 ^ kRc[0];
  for (int i = 1; i <= 5; ++i) s = M(S(s)) ^ kRc[i] ^ k1;
  s = SInv(MPrime(S(s)));
  for (int i = 6; i <= 10; ++i) s = SInv(MInv(s ^ kRc[i] ^ k1));
  return s ^ kRc[11] ^ k1 ^ k0p;
}

inline uint64_t PrinceV2(uint64_t p, uint64_t k0, uint64_t k1) {
  uint64_t s = p ^ k0 ^ kRc[0];
  for (int i = 1; i <= 5; ++i) s = M(S(s)) ^ kRc[i] ^ ((i % 2) ? k1 : k0);
  s = SInv(MPrime(S(s) ^ k0) ^ k1 ^ kBeta);
  for (int i = 6; i <= 10; ++i) {
    const uint64_t kk = (i % 2 == 0) ? k0 : (k1 ^ kAlpha ^ kBeta);
    s = SInv(MInv(s ^ kRc[i] ^ kk));
  }
  return s ^ kRc[11] ^ k1 ^ kAlpha ^ kBeta;
}

}  // namespace lippen::reference

#endif  // LIPPEN_TESTS_REFERENCE_PRINCE_H_
