// Copyright 2026 The Transduce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace transduce {

struct CriterionReport {
  int id = 0;
  std::string title;
  bool passed = false;
  // Semicolon-separated sub-check outcomes with the measured values.
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  // Criterion ids to run; empty runs all of 1..11.
  std::vector<int> only;
  std::uint64_t seed = 7;
};

inline constexpr int kCriterionCount = 11;

std::vector<CriterionReport> run_acceptance(const AcceptanceOptions& options = {});

// "PASS  3  <title>  [1.2 s]  <detail>"
std::string format_report_line(const CriterionReport& report);

}  // namespace transduce
