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

#include "liptest/tester.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace liptest {

std::pair<Vertex, Vertex> ViolationWitness::neighbor_pair() const {
  if (kind == Kind::kEdge) return {a, b};
  if (!path_edge.has_value()) {
    throw std::logic_error("ViolationWitness: diameter witness without a path edge");
  }
  return {path_edge->a, path_edge->b};
}

void TesterConfig::validate(int d) const {
  if (d < 1 || d > kMaxSamplingDim) {
    throw std::invalid_argument("tester: dimension must be in [1, " +
                                std::to_string(kMaxSamplingDim) + "]");
  }
  if (!(epsilon_prime > 0.0) || !(epsilon_prime <= 1.0)) {
    throw std::invalid_argument("tester: epsilon_prime must lie in (0, 1]");
  }
  if (!(omega > 0.0) || !(omega < 1.0)) {
    throw std::invalid_argument("tester: omega must lie in (0, 1)");
  }
  if (!(delta > 0.0) || !(delta <= 1.0)) {
    throw std::invalid_argument("tester: delta must lie in (0, 1]");
  }
  const double inv = 1.0 / delta;
  if (std::abs(inv - std::round(inv)) > 1e-9) {
    throw std::invalid_argument("tester: 1/delta must be an integer");
  }
  if (!(epsilon(d) > 0.0)) {
    throw std::invalid_argument(
        "tester: epsilon_prime <= d^2*delta (epsilon_prime = " +
        std::to_string(epsilon_prime) + ", d^2*delta = " +
        std::to_string(static_cast<double>(d) * d * delta) + ")");
  }
}

long long required_vertex_samples(double epsilon, double omega) {
  if (!(epsilon > 0.0) || !(epsilon <= 1.0)) {
    throw std::invalid_argument("required_vertex_samples: epsilon must lie in (0, 1]");
  }
  if (!(omega > 0.0) || !(omega < 1.0)) {
    throw std::invalid_argument("required_vertex_samples: omega must lie in (0, 1)");
  }
  return static_cast<long long>(std::ceil(2.0 / epsilon * std::log(2.0 / omega)));
}

long long required_edge_samples(int d, double r, double delta, double epsilon,
                                double omega) {
  if (r < 0.0 || std::isnan(r)) {
    throw std::invalid_argument("required_edge_samples: r must be >= 0");
  }
  if (r == 0.0) return 0;
  if (!std::isfinite(r)) {
    throw std::invalid_argument("required_edge_samples: r must be finite");
  }
  if (d < 1) throw std::invalid_argument("required_edge_samples: d must be >= 1");
  if (!(delta > 0.0) || !(delta <= 1.0)) {
    throw std::invalid_argument("required_edge_samples: delta must lie in (0, 1]");
  }
  if (!(epsilon > 0.0) || !(epsilon <= 1.0)) {
    throw std::invalid_argument("required_edge_samples: epsilon must lie in (0, 1]");
  }
  if (!(omega > 0.0) || !(omega < 1.0)) {
    throw std::invalid_argument("required_edge_samples: omega must lie in (0, 1)");
  }
  return static_cast<long long>(
      std::ceil(d * r / (delta * epsilon) * std::log(2.0 / omega)));
}

namespace {

struct DiameterSample {
  double r = 0.0;
  Vertex arg_min, arg_max;
  double min_value = 0.0, max_value = 0.0;
  long long queries = 0;
};

DiameterSample sample_diameter(const FunctionOracle& f,
                               const ProductDistribution& dist, long long t,
                               SeededRng& rng) {
  if (t < 1) throw std::invalid_argument("sample diameter: need at least one sample");
  DiameterSample out;
  for (long long k = 0; k < t; ++k) {
    const Vertex x = dist.sample_vertex(rng);
    const double v = f.evaluate(x);
    ++out.queries;
    if (k == 0 || v < out.min_value) {
      out.min_value = v;
      out.arg_min = x;
    }
    if (k == 0 || v > out.max_value) {
      out.max_value = v;
      out.arg_max = x;
    }
  }
  if (out.min_value == kNegInf) {
    out.r = (out.max_value == kNegInf) ? 0.0 : kPosInf;
  } else {
    out.r = out.max_value - out.min_value;
  }
  return out;
}

// Walks a shortest path from the min-value vertex to the max-value vertex
// (flipping differing coordinates in ascending order) and returns the
// max-gap edge. The endpoint gap exceeds the path length, so some edge on
// the path has gap above 1.
PathEdgeWitness max_gap_path_edge(const FunctionOracle& f, const Vertex& from,
                                  double from_value, const Vertex& to,
                                  double to_value, long long& queries) {
  PathEdgeWitness best;
  Vertex current = from;
  double current_value = from_value;
  bool have_best = false;
  for (int i = 1; i <= from.dim(); ++i) {
    if (current.bit(i) == to.bit(i)) continue;
    const Vertex next = current.with_flipped(i);
    double next_value;
    if (next == to) {
      next_value = to_value;
    } else {
      next_value = f.evaluate(next);
      ++queries;
    }
    const double gap = extended_gap(current_value, next_value);
    if (!have_best || gap > best.gap) {
      best = PathEdgeWitness{current, next, current_value, next_value, gap};
      have_best = true;
    }
    current = next;
    current_value = next_value;
  }
  if (!have_best) {
    throw std::logic_error("max_gap_path_edge: endpoints are identical");
  }
  return best;
}

}  // namespace

double estimate_sample_diameter(const FunctionOracle& f,
                                const ProductDistribution& dist, long long t,
                                SeededRng& rng) {
  return sample_diameter(f, dist, t, rng).r;
}

bool edge_is_violated(const FunctionOracle& f, const Edge& e, double threshold) {
  if (threshold < 1.0) {
    throw std::invalid_argument("edge_is_violated: threshold must be >= 1");
  }
  const auto [x, y] = e.endpoints();
  return extended_gap(f.evaluate(x), f.evaluate(y)) > threshold + kViolationGuard;
}

TesterReport test_lipschitz(const FunctionOracle& f,
                            const ProductDistribution& dist,
                            const TesterConfig& cfg, const SeededRng& rng) {
  const int d = f.dim();
  cfg.validate(d);
  if (dist.dim() != d) {
    throw std::invalid_argument("test_lipschitz: distribution dimension mismatch");
  }
  if (cfg.mode == TesterMode::kGrid) {
    if (f.range_kind() != RangeKind::kDeltaGrid) {
      throw std::invalid_argument(
          "test_lipschitz: grid mode requires a grid-valued oracle");
    }
    // The oracle's grid must refine onto the configured one.
    const double ratio = f.grid_delta() / cfg.delta;
    if (!(ratio >= 1.0 - 1e-9) || std::abs(ratio - std::round(ratio)) > 1e-6) {
      throw std::invalid_argument(
          "test_lipschitz: oracle grid step must be an integer multiple of the "
          "configured delta");
    }
  }

  const double epsilon = cfg.epsilon(d);
  TesterReport report;
  report.seed = rng.seed();

  SeededRng vertex_rng = rng.derive(0);
  SeededRng edge_rng = rng.derive(1);

  const long long t = required_vertex_samples(epsilon, cfg.omega);
  DiameterSample diam = sample_diameter(f, dist, t, vertex_rng);
  report.vertex_samples = t;
  report.sample_diameter = diam.r;
  report.point_queries = diam.queries;

  if (diam.r > static_cast<double>(d) + kViolationGuard) {
    ViolationWitness w;
    w.kind = ViolationWitness::Kind::kDiameter;
    w.a = diam.arg_min;
    w.b = diam.arg_max;
    w.fa = diam.min_value;
    w.fb = diam.max_value;
    w.gap = diam.r;
    w.threshold = static_cast<double>(d);
    w.path_edge = max_gap_path_edge(f, diam.arg_min, diam.min_value,
                                    diam.arg_max, diam.max_value,
                                    report.point_queries);
    report.witness = std::move(w);
    report.verdict = Verdict::kNo;
    return report;
  }

  const long long m =
      required_edge_samples(d, diam.r, cfg.delta, epsilon, cfg.omega);
  report.edge_samples = m;
  const double threshold =
      cfg.mode == TesterMode::kGrid ? 1.0 : 1.0 + cfg.delta;

  for (long long k = 0; k < m; ++k) {
    const Edge e = dist.sample_edge(edge_rng);
    const auto [x, y] = e.endpoints();
    const double vx = f.evaluate(x);
    const double vy = f.evaluate(y);
    report.point_queries += 2;
    const double gap = extended_gap(vx, vy);
    if (gap > threshold + kViolationGuard && !report.witness.has_value()) {
      ViolationWitness w;
      w.kind = ViolationWitness::Kind::kEdge;
      w.a = x;
      w.b = y;
      w.fa = vx;
      w.fb = vy;
      w.gap = gap;
      w.threshold = threshold;
      report.witness = std::move(w);
    }
  }

  report.verdict = report.witness.has_value() ? Verdict::kNo : Verdict::kYes;
  return report;
}

}  // namespace liptest
