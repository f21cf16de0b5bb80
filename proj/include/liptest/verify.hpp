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

#ifndef LIPTEST_VERIFY_HPP_
#define LIPTEST_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "liptest/oracle.hpp"
#include "liptest/rng.hpp"

namespace liptest {

/// End-to-end verification suites: randomized sweeps that pit the sampling
/// paths against the exhaustive oracles. These back both the `verify-all`
/// and `verify-repair` CLI commands and the acceptance harness.

struct SuiteResult {
  std::string name;
  bool passed = false;
  long long checks = 0;
  long long failures = 0;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20260811;
  /// Trial-count multiplier; < 1 gives a quick smoke pass, 1 the full sweep.
  double scale = 1.0;
};

/// 1. Accepting side: freshly generated Lipschitz functions are never
///    rejected, across dimensions 2..10 and random product distributions.
SuiteResult run_one_sided_error_suite(const VerifyOptions& opts);

/// 2. Rejecting side: the d=4 scaled dictator (oracle-certified distance 0.5
///    from Lipschitz under the uniform distribution) is rejected in at least
///    90% of seeded runs at epsilon' = 0.3.
SuiteResult run_far_rejection_suite(const VerifyOptions& opts);

/// 3. Violated-mass bound: for random grid tables with oracle-exact distance
///    epsilon, the violated edge mass is at least
///    delta*(epsilon - d^2*delta)/(d*ImD) whenever that bound is positive.
SuiteResult run_violated_mass_bound_suite(const VerifyOptions& opts);

/// 4. Repair score stability: repairing dimension i never raises another
///    dimension's violation score by more than delta (and not at all before
///    rounding), never dirties a clean dimension, and grid rounding never
///    pushes a gap of at most 1 past 1.
SuiteResult run_repair_score_suite(const VerifyOptions& opts);

/// 5. Repair correctness: full_repair output always passes the exhaustive
///    Lipschitz check; Lipschitz inputs come back unchanged.
SuiteResult run_repair_correctness_suite(const VerifyOptions& opts);

/// 6. Edge-sampler exactness: at d=3, p=(0.9, 0.2, 0.5), the empirical edge
///    histogram over 10^6 seeded draws stays within total-variation 0.005 of
///    the enumerated edge distribution.
SuiteResult run_edge_sampler_suite(const VerifyOptions& opts);

/// 7. Audit soundness: across a randomized mechanism corpus, every NO verdict
///    is confirmed non-private by the exhaustive checker and by direct
///    probability lookups at the witness pair.
SuiteResult run_privacy_soundness_suite(const VerifyOptions& opts);

/// 8. Audit completeness: the truncated geometric mechanism at its own alpha
///    always passes the audit and the release wrapper never refuses; the
///    exhaustive checker agrees its worst log-ratio is alpha.
SuiteResult run_privacy_completeness_suite(const VerifyOptions& opts);

/// 9. Worked example: randomized response q=0.25 at d=1 is rejected at
///    alpha=1 with witness ratio 3, accepted at alpha=1.2 with delta=0.05,
///    and the exhaustive checker confirms the implied guarantee.
SuiteResult run_worked_example_suite(const VerifyOptions& opts);

/// 10. Query accounting: measured oracle queries equal
///     ceil((2/eps) ln(2/omega)) + 2*ceil((d*r/(delta*eps)) ln(2/omega))
///     exactly, across a 20-configuration sweep.
SuiteResult run_query_count_suite(const VerifyOptions& opts);

/// All ten suites, in the order above.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts);

/// The repair-focused subset (suites 3, 4, 5).
std::vector<SuiteResult> run_repair_suites(const VerifyOptions& opts);

/// Property checker behind the rounding part of suite 4, parameterized over
/// the rounding function so tests can prove the checker catches bad rounders.
/// round_fn(value, delta) must map onto the delta-grid without ever pushing a
/// pair at gap <= 1 past gap 1.
struct RoundingSafetyResult {
  long long checks = 0;
  long long failures = 0;
};
RoundingSafetyResult check_rounding_pair_safety(
    const std::function<double(double, double)>& round_fn, long long trials,
    SeededRng& rng);

// Instance generators shared by the suites and tests.
ProductDistribution random_distribution(int d, double lo, double hi, SeededRng& rng);
DenseFunction random_grid_function(int d, double delta, int levels, SeededRng& rng);

}  // namespace liptest

#endif  // LIPTEST_VERIFY_HPP_
