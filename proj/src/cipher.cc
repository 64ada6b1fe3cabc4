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

#include "lippen/cipher.h"

#include <array>
#include <bit>
#include <cctype>
#include <string>

namespace lippen {
namespace prince {
namespace {

constexpr std::array<uint8_t, 16> kSbox = {0xb, 0xf, 0x3, 0x2, 0xa, 0xc,
                                           0x9, 0x1, 0x6, 0x7, 0x8, 0x0,
                                           0xe, 0x5, 0xd, 0x4};

constexpr std::array<uint64_t, 12> kRoundConstants = {
    0x0000000000000000ULL, 0x13198a2e03707344ULL, 0xa4093822299f31d0ULL,
    0x082efa98ec4e6c89ULL, 0x452821e638d01377ULL, 0xbe5466cf34e90c6cULL,
    0x7ef84f78fd955cb1ULL, 0x85840851f1ac43aaULL, 0xc882d32f25323c54ULL,
    0x64a51195e0e3610dULL, 0xd3b5a399ca0c2399ULL, 0xc0ac29b7c97c50ddULL};

constexpr std::array<uint8_t, 256> MakeByteSbox(bool inverse) {
  std::array<uint8_t, 16> box = kSbox;
  if (inverse) {
    for (int i = 0; i < 16; ++i) box[kSbox[i]] = static_cast<uint8_t>(i);
  }
  std::array<uint8_t, 256> table{};
  for (int b = 0; b < 256; ++b) {
    table[b] = static_cast<uint8_t>((box[b >> 4] << 4) | box[b & 0xf]);
  }
  return table;
}

constexpr auto kByteSbox = MakeByteSbox(false);
constexpr auto kByteSboxInv = MakeByteSbox(true);

// The 16x16 block matrices M^(0) and M^(1). Block (i, j) is m_{(i+j+w) mod 4}
// where m_k is the 4x4 identity with entry (k, k) cleared. Bit 0 is the most
// significant bit of the 16-bit chunk.
constexpr uint16_t ApplyBlockMatrix(int w, uint16_t x) {
  uint16_t out = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int skip = (i + j + w) % 4;
      for (int a = 0; a < 4; ++a) {
        if (a == skip) continue;
        if ((x >> (15 - (4 * j + a))) & 1) out ^= 1u << (15 - (4 * i + a));
      }
    }
  }
  return out;
}

struct HalfTables {
  std::array<uint16_t, 256> high;
  std::array<uint16_t, 256> low;
};

constexpr HalfTables MakeHalfTables(int w) {
  HalfTables t{};
  for (int b = 0; b < 256; ++b) {
    t.high[b] = ApplyBlockMatrix(w, static_cast<uint16_t>(b << 8));
    t.low[b] = ApplyBlockMatrix(w, static_cast<uint16_t>(b));
  }
  return t;
}

constexpr HalfTables kM0 = MakeHalfTables(0);
constexpr HalfTables kM1 = MakeHalfTables(1);

inline uint64_t ApplyChunk(const HalfTables& t, uint64_t chunk) {
  return t.high[(chunk >> 8) & 0xff] ^ t.low[chunk & 0xff];
}

constexpr uint64_t RowMask(int r) {
  uint64_t mask = 0;
  for (int c = 0; c < 4; ++c) mask |= 0xfULL << (60 - 4 * (4 * c + r));
  return mask;
}

constexpr std::array<uint64_t, 4> kRowMasks = {RowMask(0), RowMask(1),
                                               RowMask(2), RowMask(3)};

// Key additions of one PRINCE-family datapath. Decryption runs the same
// datapath over the mirrored schedule.
struct Schedule {
  uint64_t pre;
  std::array<uint64_t, 5> forward;
  uint64_t mid_pre;
  uint64_t mid_post;
  std::array<uint64_t, 5> backward;
  uint64_t post;

  Schedule Mirrored() const {
    Schedule m{};
    m.pre = post;
    m.post = pre;
    m.mid_pre = mid_post;
    m.mid_post = mid_pre;
    for (int i = 0; i < 5; ++i) {
      m.forward[i] = backward[4 - i];
      m.backward[i] = forward[4 - i];
    }
    return m;
  }
};

inline uint64_t Mix(uint64_t s) { return ShiftRows(MixPrime(s)); }
inline uint64_t InvMix(uint64_t s) { return MixPrime(InvShiftRows(s)); }

uint64_t Run(const Schedule& ks, uint64_t s) {
  s ^= ks.pre;
  for (uint64_t k : ks.forward) s = Mix(SubNibbles(s)) ^ k;
  s = SubNibbles(s) ^ ks.mid_pre;
  s = MixPrime(s) ^ ks.mid_post;
  s = InvSubNibbles(s);
  for (uint64_t k : ks.backward) s = InvSubNibbles(InvMix(s ^ k));
  return s ^ ks.post;
}

Schedule PrinceSchedule(uint64_t whiten_in, uint64_t whiten_out, uint64_t k1) {
  Schedule ks{};
  ks.pre = whiten_in ^ k1 ^ kRoundConstants[0];
  for (int i = 0; i < 5; ++i) {
    ks.forward[i] = kRoundConstants[1 + i] ^ k1;
    ks.backward[i] = kRoundConstants[6 + i] ^ k1;
  }
  ks.post = kRoundConstants[11] ^ k1 ^ whiten_out;
  return ks;
}

// PRINCEv2: round keys alternate k0/k1 through the whole datapath; the
// second half absorbs alpha ^ beta on its k1 rounds and beta is added after
// the middle M' layer.
Schedule PrinceV2Schedule(const Key128& key) {
  Schedule ks{};
  const uint64_t k1_tail = key.k1 ^ kAlpha ^ kBeta;
  ks.pre = key.k0 ^ kRoundConstants[0];
  for (int r = 1; r <= 5; ++r) {
    ks.forward[r - 1] = kRoundConstants[r] ^ ((r % 2) ? key.k1 : key.k0);
  }
  ks.mid_pre = key.k0;
  ks.mid_post = key.k1 ^ kBeta;
  for (int r = 6; r <= 10; ++r) {
    ks.backward[r - 6] = kRoundConstants[r] ^ ((r % 2) ? k1_tail : key.k0);
  }
  ks.post = kRoundConstants[11] ^ k1_tail;
  return ks;
}

Schedule ForwardSchedule(CipherKind kind, const Key128& key) {
  if (kind == CipherKind::kPrince) {
    return PrinceSchedule(key.k0, DeriveOutputWhitening(key.k0), key.k1);
  }
  return PrinceV2Schedule(key);
}

}  // namespace

uint64_t DeriveOutputWhitening(uint64_t k0) {
  return std::rotr(k0, 1) ^ (k0 >> 63);
}

uint64_t SubNibbles(uint64_t state) {
  uint64_t out = 0;
  for (int shift = 0; shift < 64; shift += 8) {
    out |= static_cast<uint64_t>(kByteSbox[(state >> shift) & 0xff]) << shift;
  }
  return out;
}

uint64_t InvSubNibbles(uint64_t state) {
  uint64_t out = 0;
  for (int shift = 0; shift < 64; shift += 8) {
    out |= static_cast<uint64_t>(kByteSboxInv[(state >> shift) & 0xff])
           << shift;
  }
  return out;
}

uint64_t MixPrime(uint64_t state) {
  return (ApplyChunk(kM0, state >> 48) << 48) |
         (ApplyChunk(kM1, state >> 32) << 32) |
         (ApplyChunk(kM1, state >> 16) << 16) | ApplyChunk(kM0, state);
}

uint64_t ShiftRows(uint64_t state) {
  return (state & kRowMasks[0]) | std::rotl(state & kRowMasks[1], 16) |
         std::rotl(state & kRowMasks[2], 32) |
         std::rotl(state & kRowMasks[3], 48);
}

uint64_t InvShiftRows(uint64_t state) {
  return (state & kRowMasks[0]) | std::rotr(state & kRowMasks[1], 16) |
         std::rotr(state & kRowMasks[2], 32) |
         std::rotr(state & kRowMasks[3], 48);
}

Block64 FxEncrypt(uint64_t whiten_in, uint64_t whiten_out, uint64_t k1,
                  Block64 block) {
  return Run(PrinceSchedule(whiten_in, whiten_out, k1), block);
}

}  // namespace prince

std::string_view CipherKindName(CipherKind kind) {
  return kind == CipherKind::kPrince ? "prince" : "princev2";
}

std::optional<CipherKind> ParseCipherKind(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "prince") return CipherKind::kPrince;
  if (lower == "princev2") return CipherKind::kPrinceV2;
  return std::nullopt;
}

Block64 Encrypt(CipherKind kind, const Key128& key, Block64 plaintext) {
  return prince::Run(prince::ForwardSchedule(kind, key), plaintext);
}

Block64 Decrypt(CipherKind kind, const Key128& key, Block64 ciphertext) {
  return prince::Run(prince::ForwardSchedule(kind, key).Mirrored(),
                     ciphertext);
}

}  // namespace lippen
