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

#ifndef LIPPEN_DOMAIN_H_
#define LIPPEN_DOMAIN_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lippen/cipher.h"
#include "lippen/random.h"
#include "lippen/seal.h"
#include "lippen/status.h"

namespace lippen {

struct DomainId {
  uint64_t value = 0;
  friend auto operator<=>(const DomainId&, const DomainId&) = default;
};

struct IssuedDomain {
  DomainId id;
  Key128 key;
};

// Registry of per-domain keys. The key bits that m2 cannot reach (all but
// the low m2_bits) must differ between any two live domains, so no choice
// of m2 values maps one domain's key onto another's; this bounds the table
// at 2^(W - m2_bits) live domains.
//
// W is 128 in production. Widths 1..64 exist so capacity exhaustion and the
// exhaustive collision search can be exercised; reduced-width keys live in
// the low W bits of k1.
class DomainKeyTable {
 public:
  static constexpr unsigned kProductionKeyWidth = 128;

  static Result<DomainKeyTable> Create(unsigned key_width = kProductionKeyWidth);

  unsigned key_width() const { return key_width_; }
  bool has_config() const { return config_.has_value(); }
  const ModifierConfig& config() const { return *config_; }

  // SET_M_SIZE. Only allowed while no domain is live.
  Status SetMSize(const ModifierConfig& cfg);

  Result<IssuedDomain> CreateDomain(CounterRng& rng);
  // SET_KEY for an existing domain.
  Status SetKey(DomainId id, const Key128& key);
  // Frees the domain and its unaffected-bit slot.
  Status Revoke(DomainId id);

  std::optional<Key128> KeyOf(DomainId id) const;
  std::vector<IssuedDomain> LiveDomains() const;
  size_t live_count() const { return entries_.size(); }
  // 2^(W - m2_bits), or nullopt when that does not fit in 64 bits.
  std::optional<uint64_t> Capacity() const;

  // Key with the m2-reachable low bits cleared.
  Key128 UnaffectedPortion(const Key128& key) const;
  // True iff all live unaffected portions are pairwise distinct, checked by
  // direct pairwise comparison rather than through the index.
  bool UniquenessHolds() const;

  // Registers a key without the uniqueness check. Only for negative-control
  // experiments that need a deliberately colliding table.
  DomainId InsertUncheckedForTesting(const Key128& key);

 private:
  explicit DomainKeyTable(unsigned key_width) : key_width_(key_width) {}

  using Prefix = std::pair<uint64_t, uint64_t>;
  Prefix PrefixOf(const Key128& key) const {
    const Key128 p = UnaffectedPortion(key);
    return {p.k0, p.k1};
  }
  bool FitsWidth(const Key128& key) const;
  Key128 RandomKey(CounterRng& rng) const;

  unsigned key_width_;
  std::optional<ModifierConfig> config_;
  std::map<DomainId, Key128> entries_;
  std::multiset<Prefix> prefixes_;
  uint64_t next_id_ = 1;
};

}  // namespace lippen

#endif  // LIPPEN_DOMAIN_H_
