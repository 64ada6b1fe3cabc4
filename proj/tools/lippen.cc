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

// lippen: command-line front end.
//
// Exit status: 0 success, 2 usage or configuration error, 3 integrity
// failure (seal/unseal), 4 experiment assertion failure (kat, attack).
// Errors are written to stderr as a single "CODE: message" line.

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lippen/attack.h"
#include "lippen/cipher.h"
#include "lippen/domain.h"
#include "lippen/hex.h"
#include "lippen/kat.h"
#include "lippen/random.h"
#include "lippen/report.h"
#include "lippen/seal.h"
#include "lippen/status.h"
#include "lippen/vm.h"

namespace lippen::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrity = 3;
constexpr int kExitAssertion = 4;

int Fail(std::string_view code, const std::string& message, int status) {
  std::cerr << code << ": " << message << "\n";
  return status;
}

int Fail(const Error& e, int status) {
  return Fail(ErrorCodeName(e.code), e.message, status);
}

struct Common {
  std::string cipher = "princev2";
  std::optional<uint64_t> seed;
  bool json = false;

  CipherKind Cipher() const { return *ParseCipherKind(cipher); }
  HexMode Hex() const { return json ? HexMode::kStrict : HexMode::kLenient; }
  // --seed, else LIPPEN_SEED, else 1.
  uint64_t Seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("LIPPEN_SEED")) {
      if (std::optional<uint64_t> v = ParseNumber(env)) return *v;
    }
    return 1;
  }
};

void AddCipher(CLI::App* app, Common& c) {
  app->add_option("--cipher", c.cipher, "prince | princev2")
      ->transform(CLI::IsMember({"prince", "princev2"}, CLI::ignore_case));
}

void AddSeed(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "RNG seed (default: $LIPPEN_SEED or 1)");
}

void AddModifierConfig(CLI::App* app, ModifierConfig& m) {
  app->add_option("--m1-bits", m.m1_bits, "modifier bits XORed into the pointer");
  app->add_option("--m2-bits", m.m2_bits, "modifier bits XORed into the key");
  app->add_option("--a-width", m.addr_width, "address width A");
  app->add_option("--tag-bits", m.tag_bits, "memory tag field width");
  app->add_option("--align-bits", m.align_bits, "guaranteed-zero low bits");
}

// ---------------------------------------------------------------------------

struct KatArgs {
  Common common;
  std::string file;
};

int RunKat(const KatArgs& args) {
  std::vector<KatVector> vectors = BuiltinKatVectors();
  if (!args.file.empty()) {
    Result<std::vector<KatVector>> loaded = LoadKatFile(args.file);
    if (!loaded.ok()) return Fail(loaded.error(), kExitUsage);
    vectors = loaded.value();
  }
  size_t passed = 0;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const KatVector& v : vectors) {
    const KatCheck c = lippen::RunKat(v);
    passed += c.passed;
    if (args.common.json) {
      rows.push_back({{"kind", CipherKindName(v.kind)},
                      {"key", FormatKey(v.key)},
                      {"plaintext", FormatHex64(v.plaintext)},
                      {"expected", FormatHex64(v.ciphertext)},
                      {"got", FormatHex64(c.encrypted)},
                      {"passed", c.passed}});
    } else {
      std::printf("%s %-8s %s %s -> %s (got %s)\n", c.passed ? "PASS" : "FAIL",
                  std::string(CipherKindName(v.kind)).c_str(),
                  FormatKey(v.key).c_str(), FormatHex64(v.plaintext).c_str(),
                  FormatHex64(v.ciphertext).c_str(),
                  FormatHex64(c.encrypted).c_str());
    }
  }
  const bool all = passed == vectors.size();
  if (args.common.json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["passed"] = passed;
    j["total"] = vectors.size();
    j["vectors"] = rows;
    std::cout << j.dump() << "\n";
  } else {
    std::printf("%s %zu/%zu\n", all ? "PASS" : "FAIL", passed, vectors.size());
  }
  return all ? kExitOk : kExitAssertion;
}

// ---------------------------------------------------------------------------

struct SealArgs {
  Common common;
  ModifierConfig config{16, 48, 48, 0, 0};
  std::string key;
  std::string ptr;
  std::string mod = "0";
};

int RunSealOrUnseal(const SealArgs& args, bool seal) {
  const HexMode mode = args.common.Hex();
  std::optional<Key128> key = ParseKeyHex(args.key, mode);
  if (!key) return Fail("MALFORMED_HEX", "--key: " + args.key, kExitUsage);
  std::optional<uint64_t> ptr = ParseHex64(args.ptr, mode);
  if (!ptr) return Fail("MALFORMED_HEX", "--ptr: " + args.ptr, kExitUsage);
  std::optional<Modifier> mod =
      ParseModifierHex(args.mod, mode == HexMode::kStrict && args.mod == "0"
                                     ? HexMode::kLenient
                                     : mode);
  if (!mod) return Fail("MALFORMED_HEX", "--mod: " + args.mod, kExitUsage);

  Result<SealEngine> engine =
      SealEngine::Create(args.common.Cipher(), args.config);
  if (!engine.ok()) return Fail(engine.error(), kExitUsage);

  uint64_t out = 0;
  if (seal) {
    Result<SealedPointer> s = engine->Seal(*key, PlainPointer{*ptr}, *mod);
    if (!s.ok()) return Fail(s.error(), kExitUsage);
    out = s->value;
  } else {
    Result<PlainPointer> p = engine->Unseal(*key, SealedPointer{*ptr}, *mod);
    if (!p.ok()) {
      const Error& e = p.error();
      if (e.code == ErrorCode::kIntegrityException) {
        return Fail(ErrorCodeName(e.code), e.message + " (garbled " + FormatHex64(e.diagnostic) + ")",
                    kExitIntegrity);
      }
      return Fail(e, kExitUsage);
    }
    out = p->value;
  }
  if (args.common.json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j[seal ? "sealed" : "plain"] = FormatHex64(out);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << FormatHex64(out) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct KeygenArgs {
  Common common;
  ModifierConfig config{0, 0, 48, 0, 0};
  uint64_t count = 1;
  unsigned key_width = DomainKeyTable::kProductionKeyWidth;
};

int RunKeygen(const KeygenArgs& args) {
  Result<DomainKeyTable> made = DomainKeyTable::Create(args.key_width);
  if (!made.ok()) return Fail(made.error(), kExitUsage);
  DomainKeyTable table = std::move(made).value();
  if (Status s = table.SetMSize(args.config); !s.ok()) {
    return Fail(s.error(), kExitUsage);
  }
  CounterRng rng(args.common.Seed(), 0x6b657967656eULL);
  nlohmann::ordered_json keys = nlohmann::ordered_json::array();
  for (uint64_t i = 0; i < args.count; ++i) {
    Result<IssuedDomain> d = table.CreateDomain(rng);
    if (!d.ok()) return Fail(d.error(), kExitUsage);
    if (args.common.json) {
      keys.push_back({{"domain", d->id.value}, {"key", FormatKey(d->key)}});
    } else {
      std::cout << FormatKey(d->key) << "\n";
    }
  }
  if (args.common.json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["m2_bits"] = args.config.m2_bits;
    j["keys"] = keys;
    std::cout << j.dump() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  Common common;
  std::string file;
  std::string scheme = "lippen";
  std::string policy = "parts";
  ModifierConfig lippen = {16, 48, 48, 0, 0};
  unsigned pac_bits = 16;
  std::string pac_failure = "exception";
  bool trace = false;
};

int RunSimulate(const SimulateArgs& args) {
  std::optional<vm::Scheme> scheme = vm::ParseScheme(args.scheme);
  if (!scheme) return Fail("INVALID_ARGUMENT", "unknown scheme " + args.scheme, kExitUsage);
  std::optional<vm::InstrumentationPolicy> policy =
      vm::PolicyByName(args.policy);
  if (!policy) return Fail("INVALID_ARGUMENT", "unknown policy " + args.policy, kExitUsage);
  Result<vm::Scenario> scn = vm::LoadScenarioFile(args.file);
  if (!scn.ok()) return Fail(scn.error(), kExitUsage);

  vm::VmConfig cfg;
  cfg.scheme = *scheme;
  cfg.policy = *policy;
  cfg.cipher = args.common.Cipher();
  cfg.lippen = args.lippen;
  cfg.pac.pac_bits = args.pac_bits;
  cfg.pac.addr_width = args.lippen.addr_width;
  cfg.pac.tag_bits = args.lippen.tag_bits;
  cfg.pac.kind = cfg.cipher;
  cfg.pac.failure_mode = args.pac_failure == "corrupt"
                             ? PacFailureMode::kCorruptTopBits
                             : PacFailureMode::kException;
  cfg.seed = args.common.Seed();
  Result<vm::Outcome> out = vm::RunScenario(scn.value(), cfg);
  if (!out.ok()) return Fail(out.error(), kExitUsage);

  if (args.common.json) {
    std::cout << OutcomeJson(out.value()) << "\n";
    return kExitOk;
  }
  if (args.trace) {
    for (const std::string& line : out->trace) std::cout << "  " << line << "\n";
  }
  std::cout << vm::VerdictName(out->verdict) << ": " << out->cause;
  if (out->event_index >= 0) std::cout << " (event " << out->event_index << ")";
  if (out->guess_count) std::cout << ", " << out->guess_count << " guesses";
  std::cout << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct AttackArgs {
  Common common;
  std::string kind;
  std::optional<unsigned> m1_bits;
  unsigned pac_bits = 8;
  std::optional<uint64_t> trials;
  std::string mode = "random";
  std::string histogram_path;
  // bitflip
  ModifierConfig bitflip_config = {18, 48, 48, 0, 2};
  std::optional<std::string> mask;
  bool unchecked = false;
  // bruteforce
  uint64_t lippen_trials = 100;
  uint64_t max_guesses = 1'000'000;
  // collision
  unsigned key_width = 12;
  unsigned m2_bits = 6;
  std::optional<uint64_t> domains;
  // avalanche
  bool flip_key = false;
};

Result<attack::ExperimentReport> BitflipReport(const AttackArgs& args,
                                               CipherKind cipher,
                                               uint64_t seed) {
  ModifierConfig cfg = args.bitflip_config;
  if (args.m1_bits) cfg.m1_bits = *args.m1_bits;
  std::vector<uint64_t> masks;
  if (args.mask) {
    std::optional<uint64_t> m = ParseHex64(*args.mask, args.common.Hex());
    if (!m) {
      return MakeError(ErrorCode::kInvalidArgument, "--mask: malformed hex");
    }
    masks.push_back(*m);
  } else {
    for (int bit = 0; bit < 64; ++bit) masks.push_back(1ULL << bit);
  }
  attack::ExperimentReport r;
  r.kind = "bitflip";
  r.seed = seed;
  r.passed = true;
  uint64_t hijacks = 0;
  uint64_t accepted = 0;
  for (uint64_t mask : masks) {
    Result<attack::BitflipResult> b =
        attack::BitflipAttack(cfg, mask, seed + r.trials, !args.unchecked, cipher);
    if (!b.ok()) return b.error();
    ++r.trials;
    r.events += b->tuple_valid;
    accepted += b->unseal_accepted;
    hijacks += b->address_hijacked;
    if (b->tuple_valid != b->expressible) r.passed = false;
    r.histogram[static_cast<uint64_t>(std::countr_zero(mask))] +=
        b->tuple_valid;
  }
  r.estimate = static_cast<double>(r.events);
  r.expected = static_cast<double>(
      masks.size() == 64 ? std::popcount(ComputeLayout(cfg).m1_mask) : 0);
  r.extra.push_back({"m1_bits", static_cast<double>(cfg.m1_bits)});
  r.extra.push_back({"unseal_accepted", static_cast<double>(accepted)});
  r.extra.push_back({"address_hijacks", static_cast<double>(hijacks)});
  return r;
}

int RunAttack(const AttackArgs& args) {
  const CipherKind cipher = args.common.Cipher();
  const uint64_t seed = args.common.Seed();
  std::vector<attack::ExperimentReport> reports;

  if (args.kind == "detection") {
    attack::DetectionSpec spec;
    spec.m1_bits = args.m1_bits.value_or(8);
    spec.trials = args.trials.value_or(1'000'000);
    spec.seed = seed;
    spec.cipher = cipher;
    if (args.mode == "random") {
      spec.mode = attack::ForgeryMode::kRandomCiphertext;
    } else if (args.mode == "wrong-modifier") {
      spec.mode = attack::ForgeryMode::kWrongModifier;
    } else if (args.mode == "bit-flip") {
      spec.mode = attack::ForgeryMode::kBitFlip;
    } else {
      return Fail("INVALID_ARGUMENT", "unknown --mode " + args.mode, kExitUsage);
    }
    Result<attack::ExperimentReport> r = attack::DetectionRate(spec);
    if (!r.ok()) return Fail(r.error(), kExitUsage);
    reports.push_back(r.value());
  } else if (args.kind == "bitflip") {
    Result<attack::ExperimentReport> r = BitflipReport(args, cipher, seed);
    if (!r.ok()) return Fail(r.error(), kExitUsage);
    reports.push_back(r.value());
  } else if (args.kind == "bruteforce") {
    attack::BruteForceSpec spec;
    spec.pac_bits = args.pac_bits;
    spec.pac_trials = args.trials.value_or(10'000);
    spec.lippen_trials = args.lippen_trials;
    spec.max_guesses = args.max_guesses;
    spec.seed = seed;
    spec.cipher = cipher;
    Result<attack::BruteForceReports> r = attack::BruteForceCompare(spec);
    if (!r.ok()) return Fail(r.error(), kExitUsage);
    reports.push_back(r->pac);
    reports.push_back(r->lippen);
  } else if (args.kind == "collision") {
    Result<DomainKeyTable> made = DomainKeyTable::Create(args.key_width);
    if (!made.ok()) return Fail(made.error(), kExitUsage);
    DomainKeyTable table = std::move(made).value();
    if (Status s = table.SetMSize({0, args.m2_bits, 48, 0, 0}); !s.ok()) {
      return Fail(s.error(), kExitUsage);
    }
    const std::optional<uint64_t> capacity = table.Capacity();
    uint64_t want = args.domains.value_or(capacity ? std::min<uint64_t>(*capacity, 64) : 64);
    CounterRng rng(seed, 0x636f6c6cULL);
    for (uint64_t i = 0; i < want; ++i) {
      Result<IssuedDomain> d = table.CreateDomain(rng);
      if (!d.ok()) return Fail(d.error(), kExitUsage);
    }
    Result<attack::ExperimentReport> r = attack::KeyCollisionProbe(
        table, args.trials.value_or(1'000'000), seed);
    if (!r.ok()) return Fail(r.error(), kExitUsage);
    reports.push_back(r.value());
  } else if (args.kind == "avalanche") {
    Result<attack::ExperimentReport> r = attack::AvalancheExperiment(
        cipher, args.trials.value_or(10'000), args.flip_key, seed);
    if (!r.ok()) return Fail(r.error(), kExitUsage);
    reports.push_back(r.value());
  } else {
    return Fail("INVALID_ARGUMENT", "unknown attack kind " + args.kind,
                kExitUsage);
  }

  if (!args.histogram_path.empty()) {
    std::ofstream csv(args.histogram_path);
    if (!csv) {
      return Fail("INVALID_ARGUMENT", "cannot write " + args.histogram_path,
                  kExitUsage);
    }
    csv << HistogramCsv(reports.front().histogram);
  }
  if (args.common.json) {
    std::cout << (reports.size() == 1 ? ReportJson(reports.front())
                                      : ReportsJson(reports))
              << "\n";
  } else {
    for (const auto& r : reports) std::cout << ReportText(r);
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  return all ? kExitOk : kExitAssertion;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  Common common;
  std::vector<std::string> ciphers = {"prince", "princev2"};
  uint64_t iterations = 1'000'000;
};

int RunBench(const BenchArgs& args) {
  if (args.iterations < 10'000) {
    return Fail("USAGE_ERROR", "--iterations must be at least 10000",
                kExitUsage);
  }
  const ModifierConfig cfg{16, 48, 48, 0, 0};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const std::string& name : args.ciphers) {
    std::optional<CipherKind> kind = ParseCipherKind(name);
    if (!kind) return Fail("INVALID_ARGUMENT", "unknown cipher " + name, kExitUsage);
    const SealEngine engine = SealEngine::Create(*kind, cfg).value();
    CounterRng rng(args.common.Seed());
    const Key128 key{rng(), rng()};
    const SealEngine::Context ctx =
        engine.MakeContext(key, Modifier::FromParts(16, rng.Bits(16), rng.Bits(48)));
    const uint64_t mask = engine.layout().address_mask;

    // Warm-up, then timed seal and unseal loops over a chained state.
    uint64_t state = rng() & mask;
    for (int i = 0; i < 1000; ++i) state = engine.SealRaw(ctx, state & mask);
    using Clock = std::chrono::steady_clock;
    uint64_t checksum = 0;
    auto start = Clock::now();
    for (uint64_t i = 0; i < args.iterations; ++i) {
      state = engine.SealRaw(ctx, state & mask);
      checksum ^= state;
    }
    const double seal_s =
        std::chrono::duration<double>(Clock::now() - start).count();
    start = Clock::now();
    for (uint64_t i = 0; i < args.iterations; ++i) {
      state = engine.UnsealRaw(ctx, state);
      checksum += state;
    }
    const double unseal_s =
        std::chrono::duration<double>(Clock::now() - start).count();
    const double n = static_cast<double>(args.iterations);
    if (args.common.json) {
      rows.push_back({{"cipher", name},
                      {"iterations", args.iterations},
                      {"seal_ns_per_op", seal_s * 1e9 / n},
                      {"seal_ops_per_sec", n / seal_s},
                      {"unseal_ns_per_op", unseal_s * 1e9 / n},
                      {"unseal_ops_per_sec", n / unseal_s},
                      {"checksum", FormatHex64(checksum)}});
    } else {
      std::printf(
          "%-8s seal %7.1f ns/op (%.3g ops/s)  unseal %7.1f ns/op (%.3g "
          "ops/s)  checksum %s\n",
          name.c_str(), seal_s * 1e9 / n, n / seal_s, unseal_s * 1e9 / n,
          n / unseal_s, FormatHex64(checksum).c_str());
    }
  }
  if (args.common.json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["results"] = rows;
    std::cout << j.dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int Main(int argc, char** argv) {
  CLI::App app{"Sealed-pointer simulator and experiment harness", "lippen"};
  app.require_subcommand(1);

  KatArgs kat;
  CLI::App* kat_cmd = app.add_subcommand("kat", "run known-answer vectors");
  kat_cmd->add_option("--file", kat.file, "vector file (kind k0 k1 pt ct)");
  kat_cmd->add_flag("--json", kat.common.json);

  SealArgs seal, unseal;
  CLI::App* seal_cmd = app.add_subcommand("seal", "seal a pointer");
  CLI::App* unseal_cmd = app.add_subcommand("unseal", "unseal a pointer");
  for (auto [cmd, a] : {std::pair{seal_cmd, &seal}, std::pair{unseal_cmd, &unseal}}) {
    AddCipher(cmd, a->common);
    AddModifierConfig(cmd, a->config);
    cmd->add_option("--key", a->key, "32 hex digits, k0 first")->required();
    cmd->add_option("--ptr", a->ptr, "16 hex digits")->required();
    cmd->add_option("--mod", a->mod, "modifier, up to 48 hex digits");
    cmd->add_flag("--json", a->common.json);
  }

  KeygenArgs keygen;
  CLI::App* keygen_cmd = app.add_subcommand("keygen", "issue domain keys");
  AddModifierConfig(keygen_cmd, keygen.config);
  keygen_cmd->get_option("--m2-bits")->required();
  keygen_cmd->add_option("--count", keygen.count);
  keygen_cmd->add_option("--key-width", keygen.key_width,
                         "128, or 1..64 for reduced-width test tables");
  AddSeed(keygen_cmd, keygen.common);
  keygen_cmd->add_flag("--json", keygen.common.json);

  SimulateArgs sim;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "run a scenario file");
  sim_cmd->add_option("file", sim.file)->required();
  sim_cmd->add_option("--scheme", sim.scheme, "none | pac | lippen");
  sim_cmd->add_option("--policy", sim.policy,
                      "parts | aos | pacstack | pactight | apple | zero | "
                      "return=<sp|zero|chained>,data=<zero|type|location>");
  sim_cmd->add_option("--pac-bits", sim.pac_bits);
  sim_cmd->add_option("--pac-failure", sim.pac_failure, "exception | corrupt")
      ->check(CLI::IsMember({"exception", "corrupt"}));
  sim_cmd->add_flag("--trace", sim.trace);
  AddCipher(sim_cmd, sim.common);
  AddModifierConfig(sim_cmd, sim.lippen);
  AddSeed(sim_cmd, sim.common);
  sim_cmd->add_flag("--json", sim.common.json);

  AttackArgs atk;
  CLI::App* atk_cmd = app.add_subcommand("attack", "run an attack experiment");
  atk_cmd->add_option("kind", atk.kind,
                      "detection | bitflip | bruteforce | collision | avalanche")
      ->required();
  atk_cmd->add_option("--m1-bits", atk.m1_bits);
  atk_cmd->add_option("--pac-bits", atk.pac_bits);
  atk_cmd->add_option("--trials", atk.trials);
  atk_cmd->add_option("--mode", atk.mode,
                      "detection forgery: random | wrong-modifier | bit-flip");
  atk_cmd->add_option("--histogram", atk.histogram_path, "CSV output path");
  atk_cmd->add_option("--mask", atk.mask, "bitflip: single mask (hex)");
  atk_cmd->add_option("--m2-bits", atk.m2_bits, "collision: table m2 width");
  atk_cmd->add_option("--a-width", atk.bitflip_config.addr_width);
  atk_cmd->add_option("--tag-bits", atk.bitflip_config.tag_bits);
  atk_cmd->add_option("--align-bits", atk.bitflip_config.align_bits);
  atk_cmd->add_flag("--unchecked", atk.unchecked,
                    "bitflip: skip config validation");
  atk_cmd->add_option("--lippen-trials", atk.lippen_trials);
  atk_cmd->add_option("--max-guesses", atk.max_guesses);
  atk_cmd->add_option("--key-width", atk.key_width);
  atk_cmd->add_option("--domains", atk.domains);
  atk_cmd->add_flag("--flip-key", atk.flip_key);
  AddCipher(atk_cmd, atk.common);
  AddSeed(atk_cmd, atk.common);
  atk_cmd->add_flag("--json", atk.common.json);

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "seal/unseal throughput");
  bench_cmd->add_option("--cipher", bench.ciphers, "repeatable")
      ->transform(CLI::IsMember({"prince", "princev2"}, CLI::ignore_case));
  bench_cmd->add_option("--iterations", bench.iterations);
  AddSeed(bench_cmd, bench.common);
  bench_cmd->add_flag("--json", bench.common.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    for (char& c : what) {
      if (c == '\n') c = ' ';
    }
    return Fail("USAGE_ERROR", what, kExitUsage);
  }

  if (kat_cmd->parsed()) return RunKat(kat);
  if (seal_cmd->parsed()) return RunSealOrUnseal(seal, true);
  if (unseal_cmd->parsed()) return RunSealOrUnseal(unseal, false);
  if (keygen_cmd->parsed()) return RunKeygen(keygen);
  if (sim_cmd->parsed()) return RunSimulate(sim);
  if (atk_cmd->parsed()) return RunAttack(atk);
  if (bench_cmd->parsed()) return RunBench(bench);
  return Fail("USAGE_ERROR", "no subcommand", kExitUsage);
}

}  // namespace lippen::cli

int main(int argc, char** argv) { return lippen::cli::Main(argc, argv); }
