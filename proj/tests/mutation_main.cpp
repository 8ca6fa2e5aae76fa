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


// Linked against the library with a perturbed EA efficiency. Succeeds only if
// every EA efficiency criterion detects the perturbation.

#include <cstdio>

#include "transduce/acceptance.hpp"

int main() {
  transduce::AcceptanceOptions options;
  options.only = {1, 2};
  int caught = 0;
  const auto reports = transduce::run_acceptance(options);
  for (const auto& report : reports) {
    std::printf("%s\n", transduce::format_report_line(report).c_str());
    if (!report.passed) ++caught;
  }
  const bool ok = caught == static_cast<int>(reports.size()) && !reports.empty();
  std::printf("mutant %s\n", ok ? "killed" : "survived");
  return ok ? 0 : 1;
}
