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

#ifndef LIPPEN_VM_H_
#define LIPPEN_VM_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lippen/cipher.h"
#include "lippen/domain.h"
#include "lippen/pac.h"
#include "lippen/random.h"
#include "lippen/seal.h"
#include "lippen/status.h"

namespace lippen::vm {

enum class Scheme { kNone, kPac, kLippen };

enum class ReturnModifierRule {
  kStackPointer,           // SP at function entry (PARTS, AOS)
  kZero,                   // constant modifier
  kChainedPreviousReturn,  // caller's protected return address (PACStack)
};

enum class DataModifierRule {
  kZero,
  kTypeId,             // static type identifier (PARTS)
  kLocationPlusTag,    // storage address plus a random tag (PACTight)
};

struct InstrumentationPolicy {
  ReturnModifierRule return_modifier = ReturnModifierRule::kStackPointer;
  DataModifierRule data_modifier = DataModifierRule::kTypeId;
  friend bool operator==(const InstrumentationPolicy&,
                         const InstrumentationPolicy&) = default;
};

// Named presets ("parts", "pacstack", "pactight", "aos", "apple", "zero")
// or an explicit "return=<sp|zero|chained>,data=<zero|type|location>".
std::optional<InstrumentationPolicy> PolicyByName(std::string_view name);
std::optional<Scheme> ParseScheme(std::string_view name);
std::string_view SchemeName(Scheme scheme);

enum class EventKind {
  kCall,
  kRet,
  kStorePtr,
  kLoadPtr,
  kDeref,
  kAttackerWrite,
  kAttackerCopy,
  kAttackerFlip,
  kAttackerGuessLoop,
  kSwitchDomain,
};

// Operand meaning by kind:
//   CALL label frame_size             a = frame_size
//   STORE_PTR slot target type_id     a = slot, b = target, c = type_id
//   LOAD_PTR slot / DEREF slot        a = slot
//   ATTACKER_WRITE addr value         a = addr, b = value
//   ATTACKER_COPY src dst             a = src,  b = dst
//   ATTACKER_FLIP addr mask           a = addr, b = mask
//   ATTACKER_GUESS_LOOP addr max tgt  a = addr, b = max guesses, c = target
//   SWITCH_DOMAIN id                  a = id
struct Event {
  EventKind kind;
  std::string label;
  uint64_t a = 0;
  uint64_t b = 0;
  uint64_t c = 0;
  int line = 0;
};

struct Scenario {
  std::vector<Event> events;
};

// One event per line; blank lines and '#' comments are ignored. Numbers are
// decimal or 0x-prefixed hex.
Result<Scenario> ParseScenario(std::string_view text);
Result<Scenario> LoadScenarioFile(const std::string& path);

// Stack layout. The first CALL from the initial stack pointer stores its
// protected return address at 0x7fff0008.
inline constexpr uint64_t kInitialStackPointer = 0x7fff0010;
inline constexpr uint64_t kCodeBase = 0x400000;
inline constexpr uint64_t kFrameRecordSize = 16;

enum class Verdict { kBenign, kDetected, kHijacked };
std::string_view VerdictName(Verdict v);

struct Outcome {
  Verdict verdict = Verdict::kBenign;
  // Index of the deciding event, -1 when the scenario ran to completion.
  int64_t event_index = -1;
  std::string cause = "completed";
  uint64_t guess_count = 0;
  // Address of the control transfer or dereference that decided a
  // HIJACKED verdict or a wild transfer.
  std::optional<uint64_t> transfer_address;
  // Plaintext view of every pointer the program stored, recovered by
  // unprotecting memory with the modifier used at store time, plus all
  // other memory words verbatim.
  std::map<uint64_t, uint64_t> plain_memory;
  std::vector<std::string> trace;
};

struct VmConfig {
  Scheme scheme = Scheme::kLippen;
  InstrumentationPolicy policy;
  CipherKind cipher = CipherKind::kPrinceV2;
  ModifierConfig lippen = {/*m1_bits=*/16, /*m2_bits=*/48,
                           /*addr_width=*/48, /*tag_bits=*/0,
                           /*align_bits=*/0};
  PacConfig pac;
  uint64_t seed = 0;
};

struct GuessResult {
  bool success = false;
  uint64_t guess_count = 0;
  uint64_t forged_value = 0;
};

// A process under one protection scheme. Single-threaded.
class Machine {
 public:
  static Result<Machine> Create(const VmConfig& config);

  // Executes the scenario from the current state. Check failures become
  // DETECTED verdicts; only malformed scenarios produce errors.
  Result<Outcome> Run(const Scenario& scenario);

  // Repeated forge-and-test against the protected pointer stored at addr,
  // aiming for a value that the program will accept as target. Every failed
  // guess is observable to the attacker and does not crash the process.
  GuessResult GuessLoop(uint64_t addr, uint64_t target, uint64_t max_guesses,
                        CounterRng& rng) const;

  uint64_t sp() const { return sp_; }
  uint64_t Read(uint64_t addr) const;
  void Write(uint64_t addr, uint64_t value) { memory_[addr] = value; }
  // Address of the protected return address of the innermost frame.
  std::optional<uint64_t> CurrentReturnSlot() const;
  const VmConfig& config() const { return config_; }

 private:
  struct Frame {
    std::string label;
    uint64_t entry_sp;
    uint64_t return_slot;
    uint64_t locals_base;
    uint64_t frame_size;
    uint64_t expected_return;
  };
  // Program-side record of a pointer it stored.
  struct StoredPointer {
    uint64_t plain;
    uint64_t modifier;
    uint64_t domain;
    uint64_t type_id;
    uint64_t tag;
  };
  enum class CheckStatus { kOk, kFailed };
  struct Checked {
    CheckStatus status;
    uint64_t value;
  };

  explicit Machine(const VmConfig& config, SealEngine engine,
                   DomainKeyTable table);

  Status EnsureDomain(uint64_t index);
  Key128 DomainKey(uint64_t index) const;
  uint64_t ReturnModifier(uint64_t entry_sp, size_t depth) const;
  uint64_t DataModifier(uint64_t addr, const StoredPointer& meta) const;
  Result<uint64_t> Protect(uint64_t value, uint64_t modifier,
                           uint64_t domain) const;
  Checked Unprotect(uint64_t raw, uint64_t modifier, uint64_t domain) const;
  bool IsCanonicalTarget(uint64_t value) const;
  uint64_t AttackerIntent(uint64_t addr, uint64_t raw) const;
  std::map<uint64_t, uint64_t> PlainMemory() const;

  VmConfig config_;
  SealEngine engine_;
  DomainKeyTable table_;
  CounterRng tag_rng_;
  std::map<uint64_t, DomainId> domains_;
  uint64_t current_domain_ = 0;
  std::map<uint64_t, uint64_t> memory_;
  std::map<uint64_t, StoredPointer> stored_;
  std::set<uint64_t> attacker_targets_;
  std::vector<Frame> frames_;
  uint64_t sp_ = kInitialStackPointer;
};

// Runs a scenario on a fresh machine.
Result<Outcome> RunScenario(const Scenario& scenario, const VmConfig& config);

// Builds a machine holding one protected return address (a single CALL) and
// runs the guess loop against it, aiming at target.
Result<GuessResult> GuessLoopOnReturnSlot(const VmConfig& config,
                                          uint64_t target,
                                          uint64_t max_guesses, uint64_t seed);

}  // namespace lippen::vm

#endif  // LIPPEN_VM_H_
