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

#ifndef LIPTEST_PRIVACY_HPP_
#define LIPTEST_PRIVACY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "liptest/mechanism.hpp"
#include "liptest/product_distribution.hpp"
#include "liptest/tester.hpp"

namespace liptest {

/// Privacy auditing built on the Lipschitz tester. A mechanism is
/// alpha-differentially private exactly when, for every output o, the
/// log-probability profile
///   lambda_o(D) = (1/alpha) * ln prob(D, o)
/// is 1-Lipschitz in Hamming distance. The audit runs the sampling tester on
/// each lambda_o; a violated edge converts directly into a neighboring
/// dataset pair whose probability ratio exceeds e^alpha.

/// Audit parameters.
///  - alpha: privacy parameter under test (> 0).
///  - beta: mass budget for the bad set in the guarantee, in (0, 1].
///  - gamma: tester failure probability budget, in (0, 1].
///  - delta: tester approximation step. When unset it defaults to
///    min(0.05, beta / (2 |outputs| d^2)) snapped down to the nearest 1/k so
///    the tester's integer-reciprocal requirement holds; the default keeps
///    beta/|outputs| - d^2*delta >= beta/(2 |outputs|).
///  - threads: worker count for the per-output tester runs. Results are
///    deterministic regardless of thread count (each output has its own
///    derived stream, aggregation is by output order).
struct GdpParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::optional<double> delta;
  int threads = 1;

  double resolved_delta(int d, int num_outputs) const;
  /// Throws std::invalid_argument naming the violated inequality.
  void validate(int d, int num_outputs) const;
};

/// The function D -> (1/alpha) ln prob(D, o), evaluated lazily against the
/// mechanism so the audit stays sublinear in the dataset domain. Entries with
/// prob = 0 evaluate to -inf. Borrows the mechanism, which must outlive it.
class LambdaTable : public FunctionOracle {
 public:
  LambdaTable(const MechanismOracle& mech, int output_index, double alpha);

  int dim() const override { return mech_.dim(); }
  double evaluate(const Vertex& dataset) const override;
  RangeKind range_kind() const override { return RangeKind::kReal; }

  int output_index() const { return output_index_; }
  double alpha() const { return alpha_; }

 private:
  const MechanismOracle& mech_;
  int output_index_;
  double alpha_;
};

LambdaTable build_lambda(const MechanismOracle& mech, int output_index,
                         double alpha);

/// Materialized lambda table for the exhaustive oracles (d <= dense cap).
DenseFunction lambda_dense(const MechanismOracle& mech, int output_index,
                           double alpha);

/// Neighboring dataset pair whose probability ratio breaks e^alpha for some
/// output. ratio is +inf when one probability is zero.
struct PrivacyWitness {
  Vertex dataset_a, dataset_b;
  int output_index = 0;
  std::string output_label;
  double prob_a = 0.0, prob_b = 0.0;
  double ratio = 0.0;
  double log_ratio = 0.0;
};

/// On YES: the mechanism satisfies the ratio condition with parameter
/// alpha_effective = alpha * (1 + delta) off a set of data mass at most
/// beta_mass, with probability at least confidence over the audit's coins.
struct GdpGuarantee {
  double alpha_effective = 0.0;
  double gamma_slack = 0.0;
  double beta_mass = 0.0;
  double confidence = 0.0;
};

struct PrivacyVerdict {
  Verdict verdict = Verdict::kYes;
  std::vector<TesterReport> per_output;  // indexed by output
  std::optional<PrivacyWitness> witness;
  std::optional<GdpGuarantee> guarantee;
  double resolved_delta = 0.0;
  std::uint64_t seed = 0;
};

/// Runs the Lipschitz tester (real mode, threshold 1 + delta) on lambda_o for
/// every output o, with proximity beta/|outputs| and failure budget
/// gamma/|outputs|. NO comes with a probability-1 witness against
/// alpha-privacy; YES carries the (alpha*(1+delta), beta) guarantee at
/// confidence 1 - gamma. Output o uses the derived stream rng.derive(o).
PrivacyVerdict gdp_test(const MechanismOracle& mech,
                        const ProductDistribution& dist, const GdpParams& params,
                        const SeededRng& rng);

struct PrivGenResult {
  PrivacyVerdict audit;
  bool failure = false;
  int output_index = -1;   // -1 on failure
  std::string output_label;
};

/// Release wrapper: audit first, then either emit one draw from
/// prob(dataset, .) or refuse. The refusal path never looks at the dataset.
/// Streams: the audit uses rng.derive(0), output sampling rng.derive(1).
PrivGenResult priv_gen(const MechanismOracle& mech, const Vertex& dataset,
                       const ProductDistribution& dist, const GdpParams& params,
                       const SeededRng& rng);

struct DpCheckResult {
  bool is_dp = false;
  double max_log_ratio = 0.0;  // +inf when a zero faces a positive prob
  Vertex dataset_a, dataset_b;
  int output_index = 0;
};

/// Ground truth: checks every neighboring dataset pair against every output
/// and reports the worst log-ratio with its witness. is_dp holds iff
/// max_log_ratio <= alpha + 1e-9. Requires d <= kMaxExhaustiveDim.
DpCheckResult dp_check_exhaustive(const MechanismOracle& mech, double alpha);

}  // namespace liptest

#endif  // LIPTEST_PRIVACY_HPP_
