// Copyright 2026 The LipTest Authors
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

// Acceptance harness: runs the verification suites at their full sweep sizes
// and enforces each one's wall-clock budget. One line per criterion.
//
//   liptest_acceptance            runs all ten criteria
//   liptest_acceptance 3 7        runs criteria 3 and 7

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "liptest/verify.hpp"

namespace {

struct Criterion {
  int number;
  double budget_seconds;
  std::function<liptest::SuiteResult(const liptest::VerifyOptions&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace liptest;

  const std::vector<Criterion> criteria = {
      {1, 30.0, run_one_sided_error_suite},
      {2, 60.0, run_far_rejection_suite},
      {3, 300.0, run_violated_mass_bound_suite},
      {4, 120.0, run_repair_score_suite},
      {5, 60.0, run_repair_correctness_suite},
      {6, 10.0, run_edge_sampler_suite},
      {7, 120.0, run_privacy_soundness_suite},
      {8, 120.0, run_privacy_completeness_suite},
      {9, 1.0, run_worked_example_suite},
      {10, 10.0, run_query_count_suite},
  };

  std::vector<int> selected;
  for (int k = 1; k < argc; ++k) {
    const int n = std::atoi(argv[k]);
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[k]);
      return 2;
    }
    selected.push_back(n);
  }
  if (selected.empty()) {
    for (const Criterion& c : criteria) selected.push_back(c.number);
  }

  VerifyOptions opts;
  opts.seed = 20260811;
  opts.scale = 1.0;

  bool all_passed = true;
  for (int n : selected) {
    const Criterion& c = criteria[static_cast<std::size_t>(n - 1)];
    const SuiteResult r = c.run(opts);
    const bool in_budget = r.seconds < c.budget_seconds;
    const bool passed = r.passed && in_budget;
    all_passed &= passed;
    std::printf("[%s] criterion %d %s: %s (%.2f s, budget %.0f s)%s\n",
                passed ? "PASS" : "FAIL", c.number, r.name.c_str(),
                r.detail.c_str(), r.seconds, c.budget_seconds,
                in_budget ? "" : " [over budget]");
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
