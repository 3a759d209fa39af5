// Copyright 2026 The ffkit Authors
//
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

// The thirteen end-to-end acceptance criteria. Each returns a measured value
// and the threshold it was held to; a criterion also fails when it overruns
// its time budget.
namespace ffkit::acceptance {

inline constexpr int kCriterionCount = 13;

struct Options {
  std::uint64_t seed = 0;
  // Lower bound used for the walk tail-mass style probabilities (criteria 1,
  // 8 and 13). Raising it is the fault-injection knob.
  double tail_threshold = 1.0 / 3.0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

CriterionResult run_criterion(int id, const Options& options = {});
std::vector<CriterionResult> run_all(const Options& options = {});

// "[PASS] 01 name: measured=... threshold=... (t s / budget s) detail".
std::string summary_line(const CriterionResult& r);

// {"schema": "ffkit-acceptance/1", "seed", "tail_threshold", "all_pass",
//  "criteria": [{id, name, pass, measured, threshold, detail,
//  budget_seconds}], "elapsed_seconds": [...]}
// Wall-clock times live only in "elapsed_seconds" so the rest of the report
// is a pure function of the options.
nlohmann::json report_json(const std::vector<CriterionResult>& results,
                           const Options& options);

}  // namespace ffkit::acceptance
