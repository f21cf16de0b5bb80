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

#include "liptest/privacy.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace liptest {

double GdpParams::resolved_delta(int d, int num_outputs) const {
  if (delta.has_value()) return *delta;
  const double raw =
      std::min(0.05, beta / (2.0 * num_outputs * static_cast<double>(d) * d));
  // Snap down to the nearest 1/k so the tester accepts it.
  const double k = std::ceil(1.0 / raw - 1e-9);
  return 1.0 / k;
}

void GdpParams::validate(int d, int num_outputs) const {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("gdp_test: alpha must be positive");
  }
  if (!(beta > 0.0) || !(beta <= 1.0)) {
    throw std::invalid_argument("gdp_test: beta must lie in (0, 1]");
  }
  if (!(gamma > 0.0) || !(gamma <= 1.0)) {
    throw std::invalid_argument("gdp_test: gamma must lie in (0, 1]");
  }
  if (num_outputs < 1) {
    throw std::invalid_argument("gdp_test: the mechanism has no outputs");
  }
  if (!(gamma / num_outputs < 1.0)) {
    throw std::invalid_argument("gdp_test: gamma/|outputs| must be < 1");
  }
  if (threads < 1) {
    throw std::invalid_argument("gdp_test: threads must be >= 1");
  }
  const double dlt = resolved_delta(d, num_outputs);
  const double inv = 1.0 / dlt;
  if (!(dlt > 0.0) || !(dlt <= 1.0) ||
      std::abs(inv - std::round(inv)) > 1e-9) {
    throw std::invalid_argument("gdp_test: delta must lie in (0, 1] with integer 1/delta");
  }
  const double epsilon_prime = beta / num_outputs;
  if (!(epsilon_prime - static_cast<double>(d) * d * dlt > 0.0)) {
    throw std::invalid_argument(
        "gdp_test: beta/|outputs| <= d^2*delta (beta/|outputs| = " +
        std::to_string(epsilon_prime) + ", d^2*delta = " +
        std::to_string(static_cast<double>(d) * d * dlt) + ")");
  }
}

LambdaTable::LambdaTable(const MechanismOracle& mech, int output_index,
                         double alpha)
    : mech_(mech), output_index_(output_index), alpha_(alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("LambdaTable: alpha must be positive");
  }
  if (output_index < 0 || output_index >= mech.num_outputs()) {
    throw std::invalid_argument("LambdaTable: unknown output index");
  }
}

double LambdaTable::evaluate(const Vertex& dataset) const {
  const double p = mech_.prob(dataset, output_index_);
  return p > 0.0 ? std::log(p) / alpha_ : kNegInf;
}

LambdaTable build_lambda(const MechanismOracle& mech, int output_index,
                         double alpha) {
  return LambdaTable(mech, output_index, alpha);
}

DenseFunction lambda_dense(const MechanismOracle& mech, int output_index,
                           double alpha) {
  const LambdaTable lambda(mech, output_index, alpha);
  const int d = mech.dim();
  if (d > kMaxExhaustiveDim) {
    throw std::invalid_argument("lambda_dense: dimension exceeds the dense cap");
  }
  std::vector<double> values;
  values.reserve(std::size_t{1} << d);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << d); ++b) {
    values.push_back(lambda.evaluate(Vertex(b, d)));
  }
  return DenseFunction(d, std::move(values), 0.0);
}

namespace {

PrivacyWitness witness_from_report(const MechanismOracle& mech, int output_index,
                                   const TesterReport& report) {
  const auto [a, b] = report.witness->neighbor_pair();
  PrivacyWitness w;
  w.dataset_a = a;
  w.dataset_b = b;
  w.output_index = output_index;
  w.output_label = mech.output_labels()[static_cast<std::size_t>(output_index)];
  w.prob_a = mech.prob(a, output_index);
  w.prob_b = mech.prob(b, output_index);
  const double hi = std::max(w.prob_a, w.prob_b);
  const double lo = std::min(w.prob_a, w.prob_b);
  w.ratio = lo > 0.0 ? hi / lo : kPosInf;
  w.log_ratio = lo > 0.0 ? std::log(hi) - std::log(lo) : kPosInf;
  return w;
}

}  // namespace

PrivacyVerdict gdp_test(const MechanismOracle& mech,
                        const ProductDistribution& dist, const GdpParams& params,
                        const SeededRng& rng) {
  const int d = mech.dim();
  if (dist.dim() != d) {
    throw std::invalid_argument("gdp_test: distribution dimension mismatch");
  }
  const int outputs = mech.num_outputs();
  params.validate(d, outputs);

  PrivacyVerdict verdict;
  verdict.seed = rng.seed();
  verdict.resolved_delta = params.resolved_delta(d, outputs);

  TesterConfig cfg;
  cfg.epsilon_prime = params.beta / outputs;
  cfg.omega = params.gamma / outputs;
  cfg.delta = verdict.resolved_delta;
  cfg.mode = TesterMode::kReal;

  verdict.per_output.resize(static_cast<std::size_t>(outputs));
  const int workers = std::min(params.threads, outputs);
  if (workers <= 1) {
    for (int o = 0; o < outputs; ++o) {
      const LambdaTable lambda(mech, o, params.alpha);
      verdict.per_output[static_cast<std::size_t>(o)] =
          test_lipschitz(lambda, dist, cfg, rng.derive(static_cast<std::uint64_t>(o)));
    }
  } else {
    std::atomic<int> next{0};
    auto work = [&]() {
      for (int o = next.fetch_add(1); o < outputs; o = next.fetch_add(1)) {
        const LambdaTable lambda(mech, o, params.alpha);
        verdict.per_output[static_cast<std::size_t>(o)] = test_lipschitz(
            lambda, dist, cfg, rng.derive(static_cast<std::uint64_t>(o)));
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (int o = 0; o < outputs; ++o) {
    const TesterReport& report = verdict.per_output[static_cast<std::size_t>(o)];
    if (report.verdict == Verdict::kNo) {
      verdict.verdict = Verdict::kNo;
      verdict.witness = witness_from_report(mech, o, report);
      return verdict;
    }
  }

  verdict.verdict = Verdict::kYes;
  verdict.guarantee = GdpGuarantee{params.alpha * (1.0 + verdict.resolved_delta),
                                   0.0, params.beta, 1.0 - params.gamma};
  return verdict;
}

PrivGenResult priv_gen(const MechanismOracle& mech, const Vertex& dataset,
                       const ProductDistribution& dist, const GdpParams& params,
                       const SeededRng& rng) {
  if (dataset.dim() != mech.dim()) {
    throw std::invalid_argument("priv_gen: dataset dimension mismatch");
  }
  PrivGenResult result;
  result.audit = gdp_test(mech, dist, params, rng.derive(0));
  if (result.audit.verdict == Verdict::kNo) {
    result.failure = true;
    return result;
  }

  SeededRng sampler = rng.derive(1);
  const double u = sampler.uniform01();
  double cumulative = 0.0;
  const int outputs = mech.num_outputs();
  int pick = outputs - 1;  // guard against rounding in the final bucket
  for (int o = 0; o < outputs; ++o) {
    cumulative += mech.prob(dataset, o);
    if (u < cumulative) {
      pick = o;
      break;
    }
  }
  result.output_index = pick;
  result.output_label = mech.output_labels()[static_cast<std::size_t>(pick)];
  return result;
}

DpCheckResult dp_check_exhaustive(const MechanismOracle& mech, double alpha) {
  const int d = mech.dim();
  if (d > kMaxExhaustiveDim) {
    throw std::invalid_argument(
        "dp_check_exhaustive: dimension exceeds the exhaustive cap");
  }
  if (alpha < 0.0) {
    throw std::invalid_argument("dp_check_exhaustive: alpha must be >= 0");
  }
  const int outputs = mech.num_outputs();

  DpCheckResult result;
  result.dataset_a = Vertex::zero(d);
  result.dataset_b = Vertex::zero(d);
  bool have_witness = false;

  const std::uint64_t n = std::uint64_t{1} << d;
  for (std::uint64_t b = 0; b < n; ++b) {
    for (int i = 1; i <= d; ++i) {
      if ((b >> (i - 1)) & 1u) continue;
      const Vertex x(b, d);
      const Vertex y = x.with_flipped(i);
      for (int o = 0; o < outputs; ++o) {
        const double px = mech.prob(x, o);
        const double py = mech.prob(y, o);
        double log_ratio;
        if (px == 0.0 && py == 0.0) {
          log_ratio = 0.0;
        } else if (px == 0.0 || py == 0.0) {
          log_ratio = kPosInf;
        } else {
          log_ratio = std::abs(std::log(px) - std::log(py));
        }
        if (!have_witness || log_ratio > result.max_log_ratio) {
          result.max_log_ratio = log_ratio;
          result.dataset_a = x;
          result.dataset_b = y;
          result.output_index = o;
          have_witness = true;
        }
      }
    }
  }
  result.is_dp = result.max_log_ratio <= alpha + 1e-9;
  return result;
}

}  // namespace liptest
