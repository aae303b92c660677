// Copyright 2026 The invsg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INVSG_BATTERY_H_
#define INVSG_BATTERY_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "invsg/catalog.h"

namespace invsg {

struct BatteryOptions {
  int jobs = 0;
  uint64_t seed = 20261019;
  bool quick = false;        // skips the exhaustive word sweep (7, 8, 9)
  int max_len = 7;           // exhaustive universe: words over a, b, c
  int random_pairs = 10000;  // random pairs up to length 12 over <= 4 bases
  std::string cache_dir;
  // Catalog the Table 1 round trip is checked against.
  std::vector<CatalogEntry> catalog = table1_catalog();
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriteria = 10;

std::vector<CriterionResult> run_battery(
    const BatteryOptions& opt,
    const std::function<void(const CriterionResult&)>& on_result = {});
CriterionResult run_criterion(int id, const BatteryOptions& opt);

// "PASS  7  decide agrees with the model oracle  (12.3 s)  <detail>"
std::string format_result(const CriterionResult& r);

struct SweepStats {
  long words = 0;
  long mixed_nonzero = 0;
  long classes = 0;
  long partition_mismatches = 0;
  long decide_samples = 0;
  long decide_failures = 0;
  long random_pairs = 0;
  long random_failures = 0;
  long random_holds = 0;
  long normalize_failures = 0;
  long zero_discrepancies = 0;
  std::vector<std::string> examples;  // first few failures
};

struct Sweep {
  SweepStats a0, b0;
  double seconds = 0;
};

Sweep run_sweep(const BatteryOptions& opt);

}  // namespace invsg

#endif  // INVSG_BATTERY_H_
