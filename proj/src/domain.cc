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

#include "lippen/domain.h"

#include <string>

namespace lippen {
namespace {

uint64_t LowMask(unsigned n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

}  // namespace

Result<DomainKeyTable> DomainKeyTable::Create(unsigned key_width) {
  if (key_width != kProductionKeyWidth && (key_width == 0 || key_width > 64)) {
    return MakeError(ErrorCode::kInvalidKeyWidth,
                     "key width must be 128 or lie in [1, 64]");
  }
  return DomainKeyTable(key_width);
}

Status DomainKeyTable::SetMSize(const ModifierConfig& cfg) {
  if (!entries_.empty()) {
    return MakeError(ErrorCode::kLiveDomainsExist,
                     std::to_string(entries_.size()) + " domain(s) still live");
  }
  if (Status s = ValidateConfig(cfg); !s.ok()) return s;
  if (cfg.m2_bits > key_width_) {
    return MakeError(ErrorCode::kM2TooWide, "m2 is wider than the key");
  }
  config_ = cfg;
  prefixes_.clear();
  return Ok{};
}

std::optional<uint64_t> DomainKeyTable::Capacity() const {
  const unsigned m2 = config_ ? config_->m2_bits : 0;
  const unsigned free_bits = key_width_ - m2;
  if (free_bits >= 64) return std::nullopt;
  return 1ULL << free_bits;
}

Key128 DomainKeyTable::UnaffectedPortion(const Key128& key) const {
  const unsigned m2 = config_ ? config_->m2_bits : 0;
  Key128 out = key;
  if (m2 >= 64) {
    out.k1 = 0;
    out.k0 &= ~LowMask(m2 - 64);
  } else {
    out.k1 &= ~LowMask(m2);
  }
  return out;
}

bool DomainKeyTable::FitsWidth(const Key128& key) const {
  if (key_width_ == kProductionKeyWidth) return true;
  return key.k0 == 0 && (key.k1 & ~LowMask(key_width_)) == 0;
}

Key128 DomainKeyTable::RandomKey(CounterRng& rng) const {
  if (key_width_ == kProductionKeyWidth) {
    const uint64_t hi = rng();
    return Key128{hi, rng()};
  }
  return Key128{0, rng.Bits(key_width_)};
}

Result<IssuedDomain> DomainKeyTable::CreateDomain(CounterRng& rng) {
  if (!config_) {
    return MakeError(ErrorCode::kNoActiveConfig, "SET_M_SIZE has not been issued");
  }
  if (std::optional<uint64_t> cap = Capacity(); cap && entries_.size() >= *cap) {
    return MakeError(ErrorCode::kCapacityExhausted,
                     "all " + std::to_string(*cap) +
                         " unaffected-bit prefixes are in use");
  }
  // Capacity was checked, so a free prefix exists and retrying terminates.
  Key128 key = RandomKey(rng);
  while (prefixes_.count(PrefixOf(key)) != 0) key = RandomKey(rng);
  const DomainId id{next_id_++};
  entries_.emplace(id, key);
  prefixes_.insert(PrefixOf(key));
  return IssuedDomain{id, key};
}

Status DomainKeyTable::SetKey(DomainId id, const Key128& key) {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    return MakeError(ErrorCode::kUnknownDomain,
                     "domain " + std::to_string(id.value) + " is not live");
  }
  if (!FitsWidth(key)) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "key has bits set beyond the table's key width");
  }
  const Prefix old_prefix = PrefixOf(it->second);
  const Prefix new_prefix = PrefixOf(key);
  if (new_prefix != old_prefix && prefixes_.count(new_prefix) != 0) {
    return MakeError(ErrorCode::kUnaffectedBitsCollision,
                     "unaffected key bits collide with another live domain");
  }
  prefixes_.erase(prefixes_.find(old_prefix));
  prefixes_.insert(new_prefix);
  it->second = key;
  return Ok{};
}

Status DomainKeyTable::Revoke(DomainId id) {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    return MakeError(ErrorCode::kUnknownDomain,
                     "domain " + std::to_string(id.value) + " is not live");
  }
  prefixes_.erase(prefixes_.find(PrefixOf(it->second)));
  entries_.erase(it);
  return Ok{};
}

std::optional<Key128> DomainKeyTable::KeyOf(DomainId id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<IssuedDomain> DomainKeyTable::LiveDomains() const {
  std::vector<IssuedDomain> out;
  out.reserve(entries_.size());
  for (const auto& [id, key] : entries_) out.push_back({id, key});
  return out;
}

bool DomainKeyTable::UniquenessHolds() const {
  const std::vector<IssuedDomain> live = LiveDomains();
  for (size_t i = 0; i < live.size(); ++i) {
    for (size_t j = i + 1; j < live.size(); ++j) {
      if (UnaffectedPortion(live[i].key) == UnaffectedPortion(live[j].key)) {
        return false;
      }
    }
  }
  return true;
}

DomainId DomainKeyTable::InsertUncheckedForTesting(const Key128& key) {
  const DomainId id{next_id_++};
  entries_.emplace(id, key);
  prefixes_.insert(PrefixOf(key));
  return id;
}

}  // namespace lippen
