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

#include "lippen/vm.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "lippen/hex.h"

namespace lippen::vm {
namespace {

constexpr uint64_t kDomainStream = 1;
constexpr uint64_t kTagStream = 2;
constexpr uint64_t kGuessStream = 3;
constexpr unsigned kLocationTagShift = 48;

uint64_t LowMask(unsigned n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

std::string Hex(uint64_t v) { return "0x" + FormatHex64(v); }

Error Malformed(const Event& e, const std::string& what) {
  return MakeError(ErrorCode::kMalformedScenario,
                   "line " + std::to_string(e.line) + ": " + what);
}

struct Syntax {
  std::string_view name;
  EventKind kind;
  int operands;
};

constexpr Syntax kSyntax[] = {
    {"CALL", EventKind::kCall, 2},
    {"RET", EventKind::kRet, 0},
    {"STORE_PTR", EventKind::kStorePtr, 3},
    {"LOAD_PTR", EventKind::kLoadPtr, 1},
    {"DEREF", EventKind::kDeref, 1},
    {"ATTACKER_WRITE", EventKind::kAttackerWrite, 2},
    {"ATTACKER_COPY", EventKind::kAttackerCopy, 2},
    {"ATTACKER_FLIP", EventKind::kAttackerFlip, 2},
    {"ATTACKER_GUESS_LOOP", EventKind::kAttackerGuessLoop, 3},
    {"SWITCH_DOMAIN", EventKind::kSwitchDomain, 1},
};

}  // namespace

std::optional<InstrumentationPolicy> PolicyByName(std::string_view name) {
  using R = ReturnModifierRule;
  using D = DataModifierRule;
  if (name == "parts") return InstrumentationPolicy{R::kStackPointer, D::kTypeId};
  if (name == "aos") return InstrumentationPolicy{R::kStackPointer, D::kZero};
  if (name == "pacstack") {
    return InstrumentationPolicy{R::kChainedPreviousReturn, D::kZero};
  }
  if (name == "pactight") {
    return InstrumentationPolicy{R::kChainedPreviousReturn, D::kLocationPlusTag};
  }
  if (name == "apple" || name == "zero") {
    return InstrumentationPolicy{R::kZero, D::kZero};
  }
  // return=<rule>,data=<rule>
  const size_t comma = name.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  std::string_view ret = name.substr(0, comma);
  std::string_view data = name.substr(comma + 1);
  if (!ret.starts_with("return=") || !data.starts_with("data=")) {
    return std::nullopt;
  }
  ret.remove_prefix(7);
  data.remove_prefix(5);
  InstrumentationPolicy p;
  if (ret == "sp") {
    p.return_modifier = R::kStackPointer;
  } else if (ret == "zero") {
    p.return_modifier = R::kZero;
  } else if (ret == "chained") {
    p.return_modifier = R::kChainedPreviousReturn;
  } else {
    return std::nullopt;
  }
  if (data == "zero") {
    p.data_modifier = D::kZero;
  } else if (data == "type") {
    p.data_modifier = D::kTypeId;
  } else if (data == "location") {
    p.data_modifier = D::kLocationPlusTag;
  } else {
    return std::nullopt;
  }
  return p;
}

std::optional<Scheme> ParseScheme(std::string_view name) {
  if (name == "none") return Scheme::kNone;
  if (name == "pac") return Scheme::kPac;
  if (name == "lippen") return Scheme::kLippen;
  return std::nullopt;
}

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kNone: return "none";
    case Scheme::kPac: return "pac";
    case Scheme::kLippen: return "lippen";
  }
  return "?";
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kBenign: return "BENIGN";
    case Verdict::kDetected: return "DETECTED";
    case Verdict::kHijacked: return "HIJACKED";
  }
  return "?";
}

Result<Scenario> ParseScenario(std::string_view text) {
  Scenario scn;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const size_t hash = raw.find('#'); hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;

    const Syntax* syntax = nullptr;
    for (const Syntax& s : kSyntax) {
      if (tok[0] == s.name) syntax = &s;
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (syntax == nullptr) {
      return MakeError(ErrorCode::kMalformedScenario,
                       where + "unknown event '" + tok[0] + "'");
    }
    if (static_cast<int>(tok.size()) - 1 != syntax->operands) {
      return MakeError(ErrorCode::kMalformedScenario,
                       where + tok[0] + " takes " +
                           std::to_string(syntax->operands) + " operand(s)");
    }
    Event e{syntax->kind, "", 0, 0, 0, line_no};
    size_t first_number = 1;
    if (e.kind == EventKind::kCall) {
      e.label = tok[1];
      first_number = 2;
    }
    uint64_t* fields[] = {&e.a, &e.b, &e.c};
    for (size_t i = first_number; i < tok.size(); ++i) {
      std::optional<uint64_t> v = ParseNumber(tok[i]);
      if (!v) {
        return MakeError(ErrorCode::kMalformedScenario,
                         where + "bad number '" + tok[i] + "'");
      }
      *fields[i - first_number] = *v;
    }
    scn.events.push_back(std::move(e));
  }
  return scn;
}

Result<Scenario> LoadScenarioFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "cannot open scenario file " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseScenario(buf.str());
}

Machine::Machine(const VmConfig& config, SealEngine engine,
                 DomainKeyTable table)
    : config_(config),
      engine_(std::move(engine)),
      table_(std::move(table)),
      tag_rng_(config.seed, kTagStream) {}

Result<Machine> Machine::Create(const VmConfig& config) {
  Result<SealEngine> engine = SealEngine::Create(config.cipher, config.lippen);
  if (!engine.ok()) return engine.error();
  if (config.scheme == Scheme::kPac) {
    if (Status s = ValidatePacConfig(config.pac); !s.ok()) return s.error();
  }
  Result<DomainKeyTable> table = DomainKeyTable::Create();
  if (!table.ok()) return table.error();
  if (Status s = table.value().SetMSize(config.lippen); !s.ok()) {
    return s.error();
  }
  Machine m(config, std::move(engine).value(), std::move(table).value());
  if (Status s = m.EnsureDomain(0); !s.ok()) return s.error();
  return m;
}

Status Machine::EnsureDomain(uint64_t index) {
  if (domains_.count(index) != 0) return Ok{};
  // Keys depend only on (seed, domain index), not on creation order.
  CounterRng rng = CounterRng(config_.seed, kDomainStream).Split(index);
  Result<IssuedDomain> issued = table_.CreateDomain(rng);
  if (!issued.ok()) return issued.error();
  domains_.emplace(index, issued->id);
  return Ok{};
}

Key128 Machine::DomainKey(uint64_t index) const {
  return *table_.KeyOf(domains_.at(index));
}

uint64_t Machine::Read(uint64_t addr) const {
  auto it = memory_.find(addr);
  return it == memory_.end() ? 0 : it->second;
}

std::optional<uint64_t> Machine::CurrentReturnSlot() const {
  if (frames_.empty()) return std::nullopt;
  return frames_.back().return_slot;
}

uint64_t Machine::ReturnModifier(uint64_t entry_sp, size_t depth) const {
  switch (config_.policy.return_modifier) {
    case ReturnModifierRule::kStackPointer:
      return entry_sp;
    case ReturnModifierRule::kZero:
      return 0;
    case ReturnModifierRule::kChainedPreviousReturn:
      return depth == 0 ? 0 : Read(frames_[depth - 1].return_slot);
  }
  return 0;
}

uint64_t Machine::DataModifier(uint64_t addr, const StoredPointer& meta) const {
  switch (config_.policy.data_modifier) {
    case DataModifierRule::kZero:
      return 0;
    case DataModifierRule::kTypeId:
      return meta.type_id;
    case DataModifierRule::kLocationPlusTag:
      return (addr & LowMask(kLocationTagShift)) |
             (meta.tag << kLocationTagShift);
  }
  return 0;
}

bool Machine::IsCanonicalTarget(uint64_t value) const {
  switch (config_.scheme) {
    case Scheme::kNone:
      return true;
    case Scheme::kPac:
      return (value & ~LowMask(config_.pac.addr_width + config_.pac.tag_bits)) ==
             0;
    case Scheme::kLippen:
      return engine_.IsCanonical(value);
  }
  return false;
}

Result<uint64_t> Machine::Protect(uint64_t value, uint64_t modifier,
                                  uint64_t domain) const {
  const Key128 key = DomainKey(domain);
  switch (config_.scheme) {
    case Scheme::kNone:
      return value;
    case Scheme::kPac: {
      Result<SealedPointer> s = PacSign(key, PlainPointer{value},
                                        Modifier::FromU64(modifier), config_.pac);
      if (!s.ok()) return s.error();
      return s->value;
    }
    case Scheme::kLippen: {
      const ModifierConfig& cfg = engine_.config();
      const Modifier mod =
          Modifier::FromU64(modifier & LowMask(cfg.m1_bits + cfg.m2_bits));
      Result<SealedPointer> s = engine_.Seal(key, PlainPointer{value}, mod);
      if (!s.ok()) return s.error();
      return s->value;
    }
  }
  return value;
}

Machine::Checked Machine::Unprotect(uint64_t raw, uint64_t modifier,
                                    uint64_t domain) const {
  const Key128 key = DomainKey(domain);
  switch (config_.scheme) {
    case Scheme::kNone:
      return {CheckStatus::kOk, raw};
    case Scheme::kPac: {
      Result<PlainPointer> p = PacAuth(key, SealedPointer{raw},
                                       Modifier::FromU64(modifier), config_.pac);
      if (p.ok()) return {CheckStatus::kOk, p->value};
      return {CheckStatus::kFailed, p.error().diagnostic};
    }
    case Scheme::kLippen: {
      const ModifierConfig& cfg = engine_.config();
      const Modifier mod =
          Modifier::FromU64(modifier & LowMask(cfg.m1_bits + cfg.m2_bits));
      const uint64_t q = engine_.UnsealRaw(engine_.MakeContext(key, mod), raw);
      return {engine_.IsCanonical(q) ? CheckStatus::kOk : CheckStatus::kFailed,
              q};
    }
  }
  return {CheckStatus::kFailed, raw};
}

uint64_t Machine::AttackerIntent(uint64_t addr, uint64_t raw) const {
  auto it = stored_.find(addr);
  return it == stored_.end() ? raw : it->second.plain;
}

std::map<uint64_t, uint64_t> Machine::PlainMemory() const {
  std::map<uint64_t, uint64_t> plain = memory_;
  for (const auto& [addr, meta] : stored_) {
    const Checked c = Unprotect(Read(addr), meta.modifier, meta.domain);
    if (c.status == CheckStatus::kOk) plain[addr] = c.value;
  }
  return plain;
}

GuessResult Machine::GuessLoop(uint64_t addr, uint64_t target,
                               uint64_t max_guesses, CounterRng& rng) const {
  GuessResult result;
  uint64_t modifier = 0;
  uint64_t domain = current_domain_;
  if (auto it = stored_.find(addr); it != stored_.end()) {
    modifier = it->second.modifier;
    domain = it->second.domain;
  }
  const Key128 key = DomainKey(domain);
  // Candidates are visited as i -> stride * i + offset with an odd stride,
  // a permutation of the candidate space, so no guess repeats and the
  // position of the correct value is uniform.
  const uint64_t stride = rng() | 1;
  const uint64_t offset = rng();

  switch (config_.scheme) {
    case Scheme::kNone:
      if (max_guesses > 0) result = {true, 1, target};
      return result;
    case Scheme::kPac: {
      const PacConfig& pcfg = config_.pac;
      const uint64_t space_mask = LowMask(pcfg.pac_bits);
      const uint64_t folded = modifier;
      const uint64_t limit =
          pcfg.pac_bits >= 64 ? max_guesses
                              : std::min<uint64_t>(max_guesses, space_mask + 1);
      for (uint64_t i = 0; i < limit; ++i) {
        const uint64_t code = (stride * i + offset) & space_mask;
        const uint64_t candidate =
            target | (pcfg.pac_bits == 0 ? 0 : code << PacFieldShift(pcfg));
        if (PacAuthenticates(pcfg, key, candidate, folded)) {
          return {true, i + 1, candidate};
        }
      }
      result.guess_count = limit;
      return result;
    }
    case Scheme::kLippen: {
      const ModifierConfig& cfg = engine_.config();
      const SealEngine::Context ctx = engine_.MakeContext(
          key, Modifier::FromU64(modifier & LowMask(cfg.m1_bits + cfg.m2_bits)));
      for (uint64_t i = 0; i < max_guesses; ++i) {
        const uint64_t candidate = stride * i + offset;
        if (engine_.UnsealRaw(ctx, candidate) == target) {
          return {true, i + 1, candidate};
        }
      }
      result.guess_count = max_guesses;
      return result;
    }
  }
  return result;
}

Result<Outcome> Machine::Run(const Scenario& scenario) {
  Outcome out;
  CounterRng guess_rng(config_.seed, kGuessStream);
  auto decide = [&out](Verdict v, size_t index, std::string cause) {
    out.verdict = v;
    out.event_index = static_cast<int64_t>(index);
    out.cause = std::move(cause);
  };
  auto local_slot = [this](const Event& e) -> Result<uint64_t> {
    if (frames_.empty()) return Malformed(e, "pointer slot used outside a frame");
    const Frame& f = frames_.back();
    if (e.a * 8 >= f.frame_size) {
      return Malformed(e, "slot " + std::to_string(e.a) + " outside frame of " +
                              std::to_string(f.frame_size) + " bytes");
    }
    return f.locals_base + 8 * e.a;
  };

  bool decided = false;
  for (size_t i = 0; i < scenario.events.size() && !decided; ++i) {
    const Event& e = scenario.events[i];
    switch (e.kind) {
      case EventKind::kCall: {
        const uint64_t frame_size = (e.a + 15) & ~uint64_t{15};
        const uint64_t ret = kCodeBase + 16 * (i + 1);
        const uint64_t entry_sp = sp_;
        const uint64_t modifier = ReturnModifier(entry_sp, frames_.size());
        Result<uint64_t> prot = Protect(ret, modifier, current_domain_);
        if (!prot.ok()) return Malformed(e, prot.error().message);
        sp_ -= kFrameRecordSize;
        const uint64_t slot = sp_ + 8;
        memory_[slot] = *prot;
        memory_[sp_] = 0;  // saved frame pointer
        stored_[slot] = {ret, modifier, current_domain_, 0, 0};
        sp_ -= frame_size;
        frames_.push_back({e.label, entry_sp, slot, sp_, frame_size, ret});
        out.trace.push_back("CALL " + e.label + " ret=" + Hex(ret) +
                            " slot=" + Hex(slot));
        break;
      }
      case EventKind::kRet: {
        if (frames_.empty()) return Malformed(e, "RET without a matching CALL");
        const Frame f = frames_.back();
        sp_ += f.frame_size;
        const uint64_t raw = Read(sp_ + 8);
        sp_ += kFrameRecordSize;
        const uint64_t modifier = ReturnModifier(sp_, frames_.size() - 1);
        frames_.pop_back();
        const Checked c = Unprotect(raw, modifier, current_domain_);
        if (c.status == CheckStatus::kFailed) {
          decide(Verdict::kDetected, i,
                 "return address check failed in " + f.label);
          decided = true;
          break;
        }
        if (c.value == f.expected_return) {
          out.trace.push_back("RET " + f.label + " -> " + Hex(c.value));
        } else if (attacker_targets_.count(c.value) != 0) {
          out.transfer_address = c.value;
          decide(Verdict::kHijacked, i,
                 "return from " + f.label + " to attacker target " +
                     Hex(c.value));
          decided = true;
        } else {
          out.transfer_address = c.value;
          decide(Verdict::kBenign, i,
                 "wild_transfer: return from " + f.label + " to " +
                     Hex(c.value));
          decided = true;
        }
        break;
      }
      case EventKind::kStorePtr: {
        Result<uint64_t> slot = local_slot(e);
        if (!slot.ok()) return slot.error();
        if (!IsCanonicalTarget(e.b)) {
          return Malformed(e, "pointer " + Hex(e.b) + " is not canonical");
        }
        StoredPointer meta{e.b, 0, current_domain_, e.c, tag_rng_.Bits(16)};
        meta.modifier = DataModifier(*slot, meta);
        Result<uint64_t> prot = Protect(e.b, meta.modifier, current_domain_);
        if (!prot.ok()) return Malformed(e, prot.error().message);
        memory_[*slot] = *prot;
        stored_[*slot] = meta;
        out.trace.push_back("STORE_PTR " + Hex(*slot) + " = " + Hex(e.b));
        break;
      }
      case EventKind::kLoadPtr:
      case EventKind::kDeref: {
        Result<uint64_t> slot = local_slot(e);
        if (!slot.ok()) return slot.error();
        auto it = stored_.find(*slot);
        if (it == stored_.end()) {
          return Malformed(e, "no pointer was stored at slot " +
                                  std::to_string(e.a));
        }
        const StoredPointer& meta = it->second;
        const Checked c = Unprotect(Read(*slot), DataModifier(*slot, meta),
                                    current_domain_);
        if (c.status == CheckStatus::kFailed) {
          decide(Verdict::kDetected, i,
                 "data pointer check failed at " + Hex(*slot));
          decided = true;
          break;
        }
        if (e.kind == EventKind::kLoadPtr || c.value == meta.plain) {
          out.trace.push_back((e.kind == EventKind::kDeref ? "DEREF " : "LOAD_PTR ") +
                              Hex(*slot) + " -> " + Hex(c.value));
          break;
        }
        out.transfer_address = c.value;
        if (attacker_targets_.count(c.value) != 0) {
          decide(Verdict::kHijacked, i,
                 "dereference of attacker target " + Hex(c.value));
        } else {
          decide(Verdict::kBenign, i, "wild_transfer: dereference of " +
                                          Hex(c.value));
        }
        decided = true;
        break;
      }
      case EventKind::kAttackerWrite:
        memory_[e.a] = e.b;
        attacker_targets_.insert(e.b);
        out.trace.push_back("ATTACKER_WRITE " + Hex(e.a) + " = " + Hex(e.b));
        break;
      case EventKind::kAttackerCopy:
        memory_[e.b] = Read(e.a);
        attacker_targets_.insert(AttackerIntent(e.a, Read(e.a)));
        out.trace.push_back("ATTACKER_COPY " + Hex(e.a) + " -> " + Hex(e.b));
        break;
      case EventKind::kAttackerFlip:
        attacker_targets_.insert(AttackerIntent(e.a, Read(e.a)) ^ e.b);
        memory_[e.a] = Read(e.a) ^ e.b;
        out.trace.push_back("ATTACKER_FLIP " + Hex(e.a) + " ^= " + Hex(e.b));
        break;
      case EventKind::kAttackerGuessLoop: {
        const GuessResult g = GuessLoop(e.a, e.c, e.b, guess_rng);
        out.guess_count += g.guess_count;
        attacker_targets_.insert(e.c);
        if (g.success) memory_[e.a] = g.forged_value;
        out.trace.push_back("ATTACKER_GUESS_LOOP " + Hex(e.a) + " " +
                            (g.success ? "forged after " : "gave up after ") +
                            std::to_string(g.guess_count) + " guesses");
        break;
      }
      case EventKind::kSwitchDomain:
        if (Status s = EnsureDomain(e.a); !s.ok()) {
          return Malformed(e, s.error().message);
        }
        current_domain_ = e.a;
        out.trace.push_back("SWITCH_DOMAIN " + std::to_string(e.a));
        break;
    }
  }
  out.plain_memory = PlainMemory();
  return out;
}

Result<Outcome> RunScenario(const Scenario& scenario, const VmConfig& config) {
  Result<Machine> m = Machine::Create(config);
  if (!m.ok()) return m.error();
  return m.value().Run(scenario);
}

Result<GuessResult> GuessLoopOnReturnSlot(const VmConfig& config,
                                          uint64_t target,
                                          uint64_t max_guesses, uint64_t seed) {
  VmConfig cfg = config;
  cfg.seed = seed;
  Result<Machine> m = Machine::Create(cfg);
  if (!m.ok()) return m.error();
  Scenario victim;
  victim.events.push_back({EventKind::kCall, "victim", 64, 0, 0, 0});
  Result<Outcome> ran = m.value().Run(victim);
  if (!ran.ok()) return ran.error();
  CounterRng rng(seed, kGuessStream);
  return m.value().GuessLoop(*m.value().CurrentReturnSlot(), target,
                             max_guesses, rng);
}

}  // namespace lippen::vm
