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

#ifndef LIPTEST_TESTER_HPP_
#define LIPTEST_TESTER_HPP_

#include <cstdint>
#include <optional>
#include <utility>

#include "liptest/function_oracle.hpp"
#include "liptest/product_distribution.hpp"
#include "liptest/rng.hpp"

namespace liptest {

/// Additive guard on every strict violation comparison. Rejection evidence
/// must survive float noise, because a NO verdict is a hard claim: the
/// recorded pair genuinely breaks the Lipschitz bound. The guard biases only
/// toward acceptance.
inline constexpr double kViolationGuard = 1e-9;

enum class Verdict { kYes, kNo };

enum class TesterMode {
  kGrid,  // grid-valued oracle, edge threshold 1
  kReal,  // real-valued oracle, edge threshold 1 + delta
};

/// Tester parameters. The working proximity is epsilon = epsilon_prime -
/// d^2 * delta, which must be positive; 1/delta must be an integer.
struct TesterConfig {
  double epsilon_prime = 0.0;
  double omega = 0.0;
  double delta = 0.0;
  TesterMode mode = TesterMode::kGrid;

  double epsilon(int d) const {
    return epsilon_prime - static_cast<double>(d) * d * delta;
  }

  /// Throws std::invalid_argument naming the violated inequality.
  void validate(int d) const;
};

/// The max-gap edge found on a shortest path between two far-apart sampled
/// vertices. Whole-path evidence alone is a non-neighboring pair; this edge
/// pins the violation to a neighboring pair, which downstream consumers need.
struct PathEdgeWitness {
  Vertex a, b;
  double fa = 0.0, fb = 0.0;
  double gap = 0.0;
};

struct ViolationWitness {
  enum class Kind { kEdge, kDiameter };

  Kind kind = Kind::kEdge;
  Vertex a, b;
  double fa = 0.0, fb = 0.0;
  double gap = 0.0;        // extended |fa - fb|
  double threshold = 0.0;  // the rejection threshold this gap exceeded
  std::optional<PathEdgeWitness> path_edge;  // present iff kind == kDiameter

  /// The neighboring pair proving non-Lipschitzness: the edge itself, or the
  /// max-gap edge along the diameter path.
  std::pair<Vertex, Vertex> neighbor_pair() const;
};

struct TesterReport {
  Verdict verdict = Verdict::kYes;
  long long vertex_samples = 0;   // t
  long long edge_samples = 0;     // number of edges drawn
  double sample_diameter = 0.0;   // r = max - min over the vertex samples
  long long point_queries = 0;    // total oracle evaluations
  std::uint64_t seed = 0;
  std::optional<ViolationWitness> witness;
};

/// ceil((2/epsilon) * ln(2/omega)).
long long required_vertex_samples(double epsilon, double omega);

/// ceil((d*r / (delta*epsilon)) * ln(2/omega)); zero when r == 0 (constant on
/// the sampled vertices, nothing to budget against).
long long required_edge_samples(int d, double r, double delta, double epsilon,
                                double omega);

/// Max - min over t fresh samples from dist. Never exceeds the true image
/// diameter; +inf when both -inf and a finite value were sampled.
double estimate_sample_diameter(const FunctionOracle& f,
                                const ProductDistribution& dist, long long t,
                                SeededRng& rng);

/// Strict check |f(x) - f(y)| > threshold + guard, with -inf pairs equal and
/// a -inf/finite pair always violated. Requires threshold >= 1.
bool edge_is_violated(const FunctionOracle& f, const Edge& e, double threshold);

/// One-sided Lipschitz tester under a product distribution.
///
///   1. epsilon = epsilon_prime - d^2 * delta
///   2. draw t = ceil((2/epsilon) ln(2/omega)) vertices from dist
///   3. r = max - min of their values; if r > d, reject (a 1-Lipschitz
///      function cannot spread more than d)
///   4. draw ceil((d*r/(delta*epsilon)) ln(2/omega)) edges from the edge
///      distribution; reject iff any is violated
///
/// Grid mode checks edges against threshold 1; real mode against 1 + delta.
/// A YES is only ever wrong in the "far" direction: Lipschitz functions are
/// accepted with probability 1, and every NO carries a re-checkable witness.
///
/// The full edge budget is always drawn (the witness is the first violated
/// edge), so the query sequence is determined by (seed, config, d, dist)
/// plus the sampled diameter r alone. Streams: vertex phase uses
/// rng.derive(0), edge phase rng.derive(1).
TesterReport test_lipschitz(const FunctionOracle& f,
                            const ProductDistribution& dist,
                            const TesterConfig& cfg, const SeededRng& rng);

}  // namespace liptest

#endif  // LIPTEST_TESTER_HPP_
