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

#ifndef LIPPEN_REPORT_H_
#define LIPPEN_REPORT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lippen/attack.h"
#include "lippen/vm.h"

namespace lippen {

// Machine-readable renderings. Every JSON document carries "schema": 1.
std::string ReportJson(const attack::ExperimentReport& report);
// Several reports in one document: {"schema": 1, "reports": [...]}.
std::string ReportsJson(const std::vector<attack::ExperimentReport>& reports);
std::string OutcomeJson(const vm::Outcome& outcome);

// Two columns, "value,count", one row per histogram bucket.
std::string HistogramCsv(const std::map<uint64_t, uint64_t>& histogram);

// Short multi-line summary for terminals.
std::string ReportText(const attack::ExperimentReport& report);

}  // namespace lippen

#endif  // LIPPEN_REPORT_H_
