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

#include "liptest/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "liptest/mechanism.hpp"
#include "liptest/privacy.hpp"
#include "liptest/repair.hpp"
#include "liptest/tester.hpp"

namespace liptest {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

long long scaled(long long n, double scale) {
  const long long s = static_cast<long long>(std::llround(n * scale));
  return std::max<long long>(1, s);
}

std::string summarize(long long checks, long long failures,
                      const std::string& extra = "") {
  std::ostringstream os;
  os << checks << " checks, " << failures << " failures";
  if (!extra.empty()) os << "; " << extra;
  return os.str();
}

}  // namespace

ProductDistribution random_distribution(int d, double lo, double hi,
                                        SeededRng& rng) {
  std::vector<double> p(static_cast<std::size_t>(d));
  for (double& v : p) v = lo + (hi - lo) * rng.uniform01();
  return ProductDistribution(std::move(p));
}

DenseFunction random_grid_function(int d, double delta, int levels,
                                   SeededRng& rng) {
  std::vector<double> values(std::size_t{1} << d);
  for (double& v : values) {
    v = delta *
        static_cast<double>(rng.uniform_below(static_cast<std::uint64_t>(levels) + 1));
  }
  return DenseFunction(d, std::move(values), delta);
}

SuiteResult run_one_sided_error_suite(const VerifyOptions& opts) {
  Stopwatch timer;
  SuiteResult result;
  result.name = "one-sided-error";
  const long long trials = scaled(500, opts.scale);
  const SeededRng root(SeededRng::derive_seed(opts.seed, 1));

  long long rejections = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    SeededRng rng = root.derive(static_cast<std::uint64_t>(trial));
    const int d = 2 + static_cast<int>(trial % 9);
    const ProductDistribution dist = random_distribution(d, 0.05, 0.95, rng);

    TesterConfig cfg;
    cfg.epsilon_prime = 0.5 + 0.4 * rng.uniform01();
    cfg.omega = 0.2 + 0.3 * rng.uniform01();
    cfg.delta = 1.0 / std::ceil(2.0 * d * d / cfg.epsilon_prime);
    const bool grid_mode = rng.bernoulli(0.5);
    cfg.mode = grid_mode ? TesterMode::kGrid : TesterMode::kReal;

    const DenseFunction f =
        random_lipschitz_function(d, rng, grid_mode ? cfg.delta : 0.0);
    ++result.checks;
    if (!is_lipschitz_exhaustive(f, 1.0)) {
      ++result.failures;  // generator self-check
      continue;
    }
    const DenseFunctionOracle oracle(f);
    const TesterReport report =
        test_lipschitz(oracle, dist, cfg, rng.derive(999));
    if (report.verdict == Verdict::kNo) {
      ++result.failures;
      ++rejections;
    }
  }
  result.passed = result.failures == 0;
  result.seconds = timer.seconds();
  result.detail = summarize(result.checks, result.failures,
                            std::to_string(rejections) + " rejections of Lipschitz inputs");
  return result;
}

SuiteResult run_far_rejection_suite(const VerifyOptions& opts) {
  Stopwatch timer;
  SuiteResult result;
  result.name = "far-rejection";
  const long long trials = scaled(200, opts.scale);
  const SeededRng root(SeededRng::derive_seed(opts.seed, 2));

  const int d = 4;
  std::vector<double> values(std::size_t{1} << d);
  for (std::uint64_t b = 0; b < values.size(); ++b) {
    values[b] = (b & 1u) ? static_cast<double>(d) : 0.0;
  }
  const DenseFunction f(d, std::move(values), 0.01);
  const ProductDistribution uniform = ProductDistribution::uniform(d);

  // The oracle pins the instance: exactly half the mass must move.
  const DistanceCertificate cert = exact_distance_to_lipschitz(f, uniform, 1.0);
  ++result.checks;
  bool distance_ok = std::abs(cert.distance - 0.5) <= 1e-12;
  if (!distance_ok) ++result.failures;

  TesterConfig cfg;
  cfg.epsilon_prime = 0.3;
  cfg.omega = 0.1;
  cfg.delta = 0.01;
  cfg.mode = TesterMode::kGrid;

  const DenseFunctionOracle oracle(f);
  long long rejections = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    ++result.checks;
    const TesterReport report =
        test_lipschitz(oracle, uniform, cfg, root.derive(static_cast<std::uint64_t>(trial)));
    if (report.verdict == Verdict::kNo) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / static_cast<double>(trials);
  if (rate < 0.9) ++result.failures;
  result.passed = result.failures == 0;
  result.seconds = timer.seconds();
  std::ostringstream extra;
  extra << "oracle distance " << cert.distance << ", rejection rate " << rate;
  result.detail = summarize(result.checks, result.failures, extra.str());
  return result;
}

SuiteResult run_violated_mass_bound_suite(const VerifyOptions& opts) {
  Stopwatch timer;
  SuiteResult result;
  result.name = "violated-mass-lower-bound";
  const long long trials = scaled(1000, opts.scale);
  const SeededRng root(SeededRng::derive_seed(opts.seed, 3));

  long long non_vacuous = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    SeededRng rng = root.derive(static_cast<std::uint64_t>(trial));
    const int d = 2 + static_cast<int>(trial % 3);
    const double delta = (trial / 3) % 2 == 0 ? 0.1 : 0.05;
    const ProductDistribution dist = random_distribution(d, 0.1, 0.9, rng);

    DenseFunction f;
    switch (trial % 4) {
      case 0:
      case 1: {
        const int levels =
            1 + static_cast<int>(rng.uniform_below(
                    static_cast<std::uint64_t>(std::llround(2.0 / delta))));
        f = random_grid_function(d, delta, levels, rng);
        break;
      }
      case 2: {
        // Scaled dictator plus grid noise: far along dimension 1.
        const double scale = 2.0 + static_cast<double>(rng.uniform_below(3));
        std::vector<double> values(std::size_t{1} << d);
        for (std::uint64_t b = 0; b < values.size(); ++b) {
          values[b] = scale * static_cast<double>(b & 1u) +
                      delta * static_cast<double>(rng.uniform_below(3));
        }
        f = DenseFunction(d, std::move(values), delta);
        break;
      }
      default: {
        // Strictly increasing with jumps above d: every pair is violated, so
        // the certified distance approaches 1.
        std::vector<double> values(std::size_t{1} << d);
        for (std::uint64_t b = 0; b < values.size(); ++b) {
          values[b] = 5.0 * static_cast<double>(b);
        }
        f = DenseFunction(d, std::move(values), delta);
        break;
      }
    }

    ++result.checks;
    const double imd = image_diameter_exact(f);
    if (imd <= 0.0) continue;
    const DistanceCertificate cert = exact_distance_to_lipschitz(f, dist, 1.0);
    const double rhs = violated_mass_lower_bound(cert.distance, d, delta, imd);
    if (rhs <= 0.0) continue;
    ++non_vacuous;
    const double lhs = violated_edge_mass(f, dist);
    if (lhs + 1e-12 < rhs) ++result.failures;
  }

  // A run with no non-vacuous instance would prove nothing.
  if (non_vacuous < std::max<long long>(1, trials / 20)) ++result.failures;
  result.passed = result.failures == 0;
  result.seconds = timer.seconds();
  result.detail = summarize(result.checks, result.failures,
                            std::to_string(non_vacuous) + " non-vacuous instances");
  return result;
}

SuiteResult run_repair_score_suite(const VerifyOptions& opts) {
  Stopwatch timer;
  SuiteResult result;
  result.name = "repair-score-stability";
  const long long trials = scaled(1000, opts.scale);
  const SeededRng root(SeededRng::derive_seed(opts.seed, 4));
  constexpr double kDeltas[] = {0.5, 0.25, 0.1, 0.05};

  long long clean_dimension_checks = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    SeededRng rng = root.derive(static_cast<std::uint64_t>(trial));
    const int d = 2 + static_cast<int>(trial % 3);
    const double delta = kDeltas[(trial / 3) % 4];
    const ProductDistribution dist = random_distribution(d, 0.1, 0.9, rng);
    const int levels =
        1 + static_cast<int>(rng.uniform_below(
                static_cast<std::uint64_t>(std::llround(2.5 / delta))));

    DenseFunction f;
    if (trial % 5 == 0) {
      // Depends only on the first ceil(d/2) coordinates, so the remaining
      // dimensions start violation-free.
      const int active = (d + 1) / 2;
      const DenseFunction base = random_grid_function(active, delta, levels, rng);
      const std::uint64_t mask = (std::uint64_t{1} << active) - 1;
      std::vector<double> values(std::size_t{1} << d);
      for (std::uint64_t b = 0; b < values.size(); ++b) {
        values[b] = base.values[b & mask];
      }
      f = DenseFunction(d, std::move(values), delta);
    } else {
      f = random_grid_function(d, delta, levels, rng);
    }

    for (int i = 1; i <= d; ++i) {
      const DenseFunction fix = basic_operator_fixpoint(f, i, dist);
      const DenseFunction rep = repair_dimension(f, i, dist);
      for (int j = 1; j <= d; ++j) {
        if (j == i) continue;
        const double before = violation_score_dimension(f, j, dist);
        const double pre_round = violation_score_dimension(fix, j, dist);
        const double after = violation_score_dimension(rep, j, dist);
        ++result.checks;
        if (pre_round > before + 1e-12) ++result.failures;
        ++result.checks;
        if (after > before + delta + 1e-9) ++result.failures;
        if (before <= 1e-15) {
          ++clean_dimension_checks;
          ++result.checks;
          if (after > 1e-12) ++result.failures;
        }
      }
    }
  }

  SeededRng rounding_rng = root.derive(1000003);
  const RoundingSafetyResult rounding = check_rounding_pair_safety(
      round_to_grid, scaled(10000, opts.scale), rounding_rng);
  result.checks += rounding.checks;
  result.failures += rounding.failures;

  result.passed = result.failures == 0;
  result.seconds = timer.seconds();
  result.detail = summarize(result.checks, result.failures,
                            std::to_string(clean_dimension_checks) +
                                " clean-dimension cases, " +
                                std::to_string(rounding.checks) + " rounding pairs");
  return result;
}

SuiteResult run_repair_correctness_suite(const VerifyOptions& opts) {
  Stopwatch timer;
  SuiteResult result;
  result.name = "repair-correctness";
  const long long trials = scaled(500, opts.scale);
  const SeededRng root(SeededRng::derive_seed(opts.seed, 5));
  constexpr double kDeltas[] = {0.5, 0.25, 0.1, 0.05};

  long long already_lipschitz = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    SeededRng rng = root.derive(static_cast<std::uint64_t>(trial));
    const int d = 1 + static_cast<int>(trial % 4);
    const double delta = kDeltas[(trial / 4) % 4];
    const ProductDistribution dist = random_distribution(d, 0.1, 0.9, rng);
    const int levels =
        1 + static_cast<int>(rng.uniform_below(
                static_cast<std::uint64_t>(std::llround(2.5 / delta))));
    const DenseFunction f = random_grid_function(d, delta, levels, rng);

    const DenseFunction repaired = full_repair(f, dist);
    ++result.checks;
    if (!is_lipschitz_exhaustive(repaired, 1.0)) ++result.failures;

    if (is_lipschitz_exhaustive(f, 1.0)) {
      ++already_lipschitz;
      ++result.checks;
      for (std::size_t k = 0; k < f.values.size(); ++k) {
        if (std::abs(f.values[k] - repaired.values[k]) > 1e-12) {
          ++result.failures;
          break;
        }
      }
    }
  }
  result.passed = result.failures == 0;
  result.seconds = timer.seconds();
  result.detail = summarize(result.checks, result.failures,
                            std::to_string(already_lipschitz) +
                                " inputs already Lipschitz (must pass through)");
  return result;
}

SuiteResult run_edge_sampler_suite(const VerifyOptions& opts) {
  Stopwatch timer;
  SuiteResult result;
  result.name = "edge-sampler-exactness";
  const long long draws = scaled(1000000, opts.scale);
  SeededRng rng(SeededRng::derive_seed(opts.seed, 6));

  const ProductDistribution dist({0.9, 0.2, 0.5});

  std::map<std::pair<std::uint64_t, int>, long long> counts;
  for (long long k = 0; k < draws; ++k) {
    const Edge e = dist.sample_edge(rng);
    ++counts[{e.base().bits(), e.dimension()}];
  }

  double tv = 0.0;
  for (const auto& [edge, mass] : dist.enumerate_edge_masses()) {
    const auto it = counts.find({edge.base().bits(), edge.dimension()});
    const double empirical =
        it == counts.end()
            ? 0.0
            : static_cast<double>(it->second) / static_cast<double>(draws);
    tv += std::abs(empirical - mass);
    counts.erase({edge.base().bits(), edge.dimension()});
  }
  tv /= 2.0;

  ++result.checks;
  if (!counts.empty()) ++result.failures;  // sampler produced a non-edge
  ++result.checks;
  if (!(tv < 0.005)) ++result.failures;
  result.passed = result.failures == 0;
  result.seconds = timer.seconds();
  std::ostringstream extra;
  extra << draws << " draws, total-variation distance " << tv;
  result.detail = summarize(result.checks, result.failures, extra.str());
  return result;
}

namespace {

std::unique_ptr<MechanismOracle> random_table_mechanism(int d, int outputs,
                                                        SeededRng& rng) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(outputs));
  for (int o = 0; o < outputs; ++o) labels.push_back(std::to_string(o));
  std::vector<std::vector<double>> rows(std::size_t{1} << d);
  for (auto& row : rows) {
    row.resize(static_cast<std::size_t>(outputs));
    double sum = 0.0;
    for (double& p : row) {
      p = -std::log(1.0 - rng.uniform01());  // exponential, then normalize
      sum += p;
    }
    for (double& p : row) p /= sum;
  }
  return std::make_unique<TableMechanism>(d, std::move(labels), std::move(rows));
}

}  // namespace

SuiteResult run_privacy_soundness_suite(const VerifyOptions& opts) {
  Stopwatch timer;
  SuiteResult result;
  result.name = "privacy-soundness";
  const long long trials = scaled(50, opts.scale);
  const SeededRng root(SeededRng::derive_seed(opts.seed, 7));

  long long no_verdicts = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    SeededRng rng = root.derive(static_cast<std::uint64_t>(trial));
    std::unique_ptr<MechanismOracle> mech;
    switch (trial % 8) {
      case 5:
        mech = std::make_unique<TruncatedGeometricMechanism>(
            1 + static_cast<int>(trial % 3), 0.4 + 0.8 * rng.uniform01());
        break;
      case 6:
        mech = std::make_unique<RandomizedResponseMechanism>(
            1 + static_cast<int>(trial % 3), 0.1 + 0.35 * rng.uniform01());
        break;
      case 7:
        mech = std::make_unique<DeterministicProjectionMechanism>(
            1 + static_cast<int>(trial % 6), 1);
        break;
      default:
        mech = random_table_mechanism(1 + static_cast<int>(trial % 6),
                                      2 + static_cast<int>(rng.uniform_below(7)),
                                      rng);
        break;
    }

    const ProductDistribution dist =
        random_distribution(mech->dim(), 0.2, 0.8, rng);
    GdpParams params;
    params.alpha = 0.3 + 1.2 * rng.uniform01();
    params.beta = 0.5;
    params.gamma = 0.2;

    const PrivacyVerdict verdict =
        gdp_test(*mech, dist, params, rng.derive(500));
    if (verdict.verdict != Verdict::kNo) continue;
    ++no_verdicts;

    // Every NO must be backed by ground truth and by the witness itself.
    ++result.checks;
    const DpCheckResult truth = dp_check_exhaustive(*mech, params.alpha);
    if (truth.is_dp) ++result.failures;

    ++result.checks;
    const PrivacyWitness& w = *verdict.witness;
    const double hi = std::max(w.prob_a, w.prob_b);
    const double lo = std::min(w.prob_a, w.prob_b);
    const bool witness_violates =
        (lo == 0.0 && hi > 0.0) || hi > std::exp(params.alpha) * lo;
    if (!witness_violates) ++result.failures;
  }

  if (no_verdicts < std::max<long long>(1, trials / 5)) ++result.failures;
  result.passed = result.failures == 0;
  result.seconds = timer.seconds();
  result.detail = summarize(result.checks, result.failures,
                            std::to_string(no_verdicts) + " NO verdicts, all cross-checked");
  return result;
}

SuiteResult run_privacy_completeness_suite(const VerifyOptions& opts) {
  Stopwatch timer;
  SuiteResult result;
  result.name = "privacy-completeness";
  const long long trials = scaled(200, opts.scale);
  const SeededRng root(SeededRng::derive_seed(opts.seed, 8));
  const double alpha0 = std::log(2.0);

  std::map<int, TruncatedGeometricMechanism> mechanisms;
  for (int d = 2; d <= 6; ++d) mechanisms.emplace(d, TruncatedGeometricMechanism(d, alpha0));

  // Audit cost grows steeply with d; spread the trials accordingly.
  constexpr int kDimSchedule[10] = {2, 2, 2, 3, 3, 3, 4, 4, 5, 6};

  long long failures_to_release = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    SeededRng rng = root.derive(static_cast<std::uint64_t>(trial));
    const int d = kDimSchedule[trial % 10];
    const TruncatedGeometricMechanism& mech = mechanisms.at(d);
    const ProductDistribution dist = random_distribution(d, 0.3, 0.7, rng);
    const Vertex dataset = [&] {
      SeededRng data_rng = rng.derive(1);
      return dist.sample_vertex(data_rng);
    }();

    GdpParams params;
    params.alpha = alpha0;
    params.beta = 0.8;
    params.gamma = 0.6;

    ++result.checks;
    const PrivGenResult res = priv_gen(mech, dataset, dist, params, rng.derive(2));
    if (res.failure || res.audit.verdict != Verdict::kYes ||
        res.output_index < 0 || res.output_index >= mech.num_outputs()) {
      ++result.failures;
      if (res.failure) ++failures_to_release;
    }
  }

  for (int d = 2; d <= 6; ++d) {
    ++result.checks;
    const DpCheckResult truth = dp_check_exhaustive(mechanisms.at(d), alpha0);
    if (!truth.is_dp || !(truth.max_log_ratio <= alpha0 + 1e-9)) ++result.failures;
  }

  result.passed = result.failures == 0;
  result.seconds = timer.seconds();
  result.detail = summarize(result.checks, result.failures,
                            std::to_string(failures_to_release) + " refused releases");
  return result;
}

SuiteResult run_worked_example_suite(const VerifyOptions& opts) {
  Stopwatch timer;
  SuiteResult result;
  result.name = "worked-example";
  const SeededRng root(SeededRng::derive_seed(opts.seed, 9));

  const RandomizedResponseMechanism mech(1, 0.25);
  const ProductDistribution uniform = ProductDistribution::uniform(1);

  for (int round = 0; round < 5; ++round) {
    GdpParams reject_params;
    reject_params.alpha = 1.0;
    reject_params.beta = 0.5;
    reject_params.gamma = 0.1;
    reject_params.delta = 0.05;

    ++result.checks;
    const PrivacyVerdict no_verdict =
        gdp_test(mech, uniform, reject_params, root.derive(static_cast<std::uint64_t>(round)));
    const bool no_ok = no_verdict.verdict == Verdict::kNo &&
                       no_verdict.witness.has_value() &&
                       std::abs(no_verdict.witness->ratio - 3.0) <= 1e-9;
    if (!no_ok) ++result.failures;

    GdpParams accept_params = reject_params;
    accept_params.alpha = 1.2;
    ++result.checks;
    const PrivacyVerdict yes_verdict = gdp_test(
        mech, uniform, accept_params, root.derive(100 + static_cast<std::uint64_t>(round)));
    const bool yes_ok =
        yes_verdict.verdict == Verdict::kYes && yes_verdict.guarantee.has_value() &&
        std::abs(yes_verdict.guarantee->alpha_effective - 1.2 * 1.05) <= 1e-12;
    if (!yes_ok) ++result.failures;
  }

  // The exhaustive checker agrees with both sides of the example.
  ++result.checks;
  if (!dp_check_exhaustive(mech, 1.2 * 1.05).is_dp) ++result.failures;
  ++result.checks;
  if (dp_check_exhaustive(mech, 1.0).is_dp) ++result.failures;

  result.passed = result.failures == 0;
  result.seconds = timer.seconds();
  result.detail = summarize(result.checks, result.failures);
  return result;
}

SuiteResult run_query_count_suite(const VerifyOptions& opts) {
  Stopwatch timer;
  SuiteResult result;
  result.name = "query-count";
  const SeededRng root(SeededRng::derive_seed(opts.seed, 10));

  struct Config {
    int d;
    const char* function;
    double epsilon_prime;
    double omega;
    TesterMode mode;
    bool uniform;
  };
  const Config sweep[] = {
      {2, "hamming-weight", 0.6, 0.1, TesterMode::kGrid, true},
      {3, "hamming-weight", 0.5, 0.2, TesterMode::kGrid, false},
      {4, "hamming-weight", 0.4, 0.1, TesterMode::kGrid, true},
      {6, "hamming-weight", 0.6, 0.3, TesterMode::kGrid, false},
      {8, "hamming-weight", 0.8, 0.3, TesterMode::kGrid, true},
      {2, "scaled-dictator?k=2", 0.5, 0.1, TesterMode::kGrid, true},
      {3, "scaled-dictator?k=3", 0.6, 0.2, TesterMode::kGrid, false},
      {4, "scaled-dictator?k=4", 0.3, 0.1, TesterMode::kGrid, true},
      {5, "scaled-dictator?k=5", 0.5, 0.25, TesterMode::kGrid, false},
      {6, "scaled-dictator?k=6", 0.7, 0.3, TesterMode::kGrid, true},
      {2, "scaled-dictator?k=2", 0.5, 0.1, TesterMode::kReal, false},
      {4, "scaled-dictator?k=4", 0.6, 0.2, TesterMode::kReal, true},
      {3, "constant?value=0.7", 0.5, 0.1, TesterMode::kReal, true},
      {5, "constant?value=-2.5", 0.6, 0.2, TesterMode::kReal, false},
      {4, "random-lipschitz?seed=1", 0.5, 0.1, TesterMode::kReal, true},
      {5, "random-lipschitz?seed=2", 0.6, 0.2, TesterMode::kReal, false},
      {6, "random-lipschitz?seed=3", 0.7, 0.3, TesterMode::kReal, true},
      {7, "random-lipschitz?seed=4", 0.8, 0.25, TesterMode::kReal, false},
      {8, "random-lipschitz?seed=5", 0.9, 0.3, TesterMode::kReal, true},
      {3, "hamming-weight", 0.9, 0.4, TesterMode::kReal, false},
  };

  std::uint64_t stream = 0;
  for (const Config& c : sweep) {
    SeededRng rng = root.derive(stream++);
    const ProductDistribution dist =
        c.uniform ? ProductDistribution::uniform(c.d)
                  : random_distribution(c.d, 0.2, 0.8, rng);
    const auto f = make_builtin_function(c.function, c.d);

    TesterConfig cfg;
    cfg.epsilon_prime = c.epsilon_prime;
    cfg.omega = c.omega;
    cfg.delta = 1.0 / std::ceil(2.0 * c.d * c.d / c.epsilon_prime);
    cfg.mode = c.mode;

    const CountingOracle counting(*f);
    const TesterReport report = test_lipschitz(counting, dist, cfg, rng.derive(7));

    const double epsilon = cfg.epsilon(c.d);
    const long long expected_t = required_vertex_samples(epsilon, cfg.omega);
    const long long expected_m = required_edge_samples(
        c.d, report.sample_diameter, cfg.delta, epsilon, cfg.omega);

    ++result.checks;
    if (report.vertex_samples != expected_t) ++result.failures;
    ++result.checks;
    if (report.edge_samples != expected_m) ++result.failures;
    ++result.checks;
    if (report.point_queries != expected_t + 2 * expected_m) ++result.failures;
    ++result.checks;
    if (counting.count() != report.point_queries) ++result.failures;
  }

  result.passed = result.failures == 0;
  result.seconds = timer.seconds();
  result.detail = summarize(result.checks, result.failures, "20-config sweep");
  return result;
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts) {
  return {
      run_one_sided_error_suite(opts),   run_far_rejection_suite(opts),
      run_violated_mass_bound_suite(opts), run_repair_score_suite(opts),
      run_repair_correctness_suite(opts), run_edge_sampler_suite(opts),
      run_privacy_soundness_suite(opts),  run_privacy_completeness_suite(opts),
      run_worked_example_suite(opts),     run_query_count_suite(opts),
  };
}

std::vector<SuiteResult> run_repair_suites(const VerifyOptions& opts) {
  return {
      run_violated_mass_bound_suite(opts),
      run_repair_score_suite(opts),
      run_repair_correctness_suite(opts),
  };
}

RoundingSafetyResult check_rounding_pair_safety(
    const std::function<double(double, double)>& round_fn, long long trials,
    SeededRng& rng) {
  RoundingSafetyResult result;
  constexpr double kDeltas[] = {0.5, 0.25, 0.2, 0.1, 0.05};
  for (long long k = 0; k < trials; ++k) {
    const double delta = kDeltas[static_cast<std::size_t>(k % 5)];
    double a = (rng.uniform01() - 0.5) * 8.0;
    double gap = rng.uniform01();
    if (k % 10 == 0) gap = 1.0;                    // the boundary case
    if (k % 17 == 0) a = delta * (std::floor(a / delta) + 0.5);  // exact tie
    const double b = rng.bernoulli(0.5) ? a + gap : a - gap;

    const double ra = round_fn(a, delta);
    const double rb = round_fn(b, delta);
    ++result.checks;
    if (std::abs(ra - rb) > 1.0 + 1e-12) ++result.failures;
    // The rounder must actually round: stay within half a step.
    ++result.checks;
    if (std::abs(ra - a) > delta / 2.0 + 1e-12) ++result.failures;
  }
  return result;
}

}  // namespace liptest
