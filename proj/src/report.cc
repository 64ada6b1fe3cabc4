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

#include "lippen/report.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "lippen/hex.h"

namespace lippen {

using nlohmann::ordered_json;

namespace {

ordered_json ReportObject(const attack::ExperimentReport& r) {
  ordered_json j;
  j["kind"] = r.kind;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["events"] = r.events;
  j["estimate"] = r.estimate;
  j["std_error"] = r.std_error;
  j["expected"] = r.expected;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["wall_time_seconds"] = r.wall_time_seconds;
  ordered_json hist = ordered_json::array();
  for (const auto& [value, count] : r.histogram) {
    hist.push_back({{"value", value}, {"count", count}});
  }
  j["histogram"] = hist;
  ordered_json extra = ordered_json::object();
  for (const auto& [name, value] : r.extra) extra[name] = value;
  j["extra"] = extra;
  return j;
}

}  // namespace

std::string ReportJson(const attack::ExperimentReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j.update(ReportObject(r));
  return j.dump();
}

std::string ReportsJson(const std::vector<attack::ExperimentReport>& reports) {
  ordered_json j;
  j["schema"] = 1;
  j["reports"] = ordered_json::array();
  for (const auto& r : reports) j["reports"].push_back(ReportObject(r));
  return j.dump();
}

std::string OutcomeJson(const vm::Outcome& o) {
  ordered_json j;
  j["schema"] = 1;
  j["verdict"] = vm::VerdictName(o.verdict);
  ordered_json detail;
  detail["event_index"] = o.event_index;
  detail["cause"] = o.cause;
  if (o.transfer_address) {
    detail["transfer_address"] = FormatHex64(*o.transfer_address);
  }
  ordered_json memory = ordered_json::object();
  for (const auto& [addr, value] : o.plain_memory) {
    memory[FormatHex64(addr)] = FormatHex64(value);
  }
  detail["plain_memory"] = memory;
  detail["trace"] = o.trace;
  j["detail"] = detail;
  j["guess_count"] = o.guess_count;
  return j.dump();
}

std::string HistogramCsv(const std::map<uint64_t, uint64_t>& histogram) {
  std::string out = "value,count\n";
  for (const auto& [value, count] : histogram) {
    out += std::to_string(value) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string ReportText(const attack::ExperimentReport& r) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%s: %s\n", r.kind.c_str(),
                r.passed ? "PASS" : "FAIL");
  out << line;
  std::snprintf(line, sizeof(line),
                "  trials=%llu events=%llu estimate=%.6g +/- %.3g\n",
                static_cast<unsigned long long>(r.trials),
                static_cast<unsigned long long>(r.events), r.estimate,
                r.std_error);
  out << line;
  std::snprintf(line, sizeof(line), "  expected=%.6g tolerance=%.3g\n",
                r.expected, r.tolerance);
  out << line;
  for (const auto& [name, value] : r.extra) {
    std::snprintf(line, sizeof(line), "  %s=%.6g\n", name.c_str(), value);
    out << line;
  }
  std::snprintf(line, sizeof(line), "  wall_time=%.3fs\n",
                r.wall_time_seconds);
  out << line;
  return out.str();
}

}  // namespace lippen
