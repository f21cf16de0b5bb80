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

#ifndef LIPTEST_PRODUCT_DISTRIBUTION_HPP_
#define LIPTEST_PRODUCT_DISTRIBUTION_HPP_

#include <vector>

#include "liptest/hypercube.hpp"
#include "liptest/rng.hpp"

namespace liptest {

/// Product distribution Ber(p_1) x ... x Ber(p_d) on hypercube vertices,
/// together with the induced edge distribution that assigns mass
/// (p_x + p_y) / d to the edge {x, y}.
///
/// Coordinate probabilities must lie strictly inside (0, 1): a degenerate
/// coordinate collapses the domain and breaks the edge-distribution
/// normalization (each dimension's matching must carry total mass 1/d).
class ProductDistribution {
 public:
  /// Throws std::invalid_argument unless every probability is in (0, 1) and
  /// 1 <= d <= kMaxSamplingDim.
  explicit ProductDistribution(std::vector<double> probabilities);

  static ProductDistribution uniform(int d);

  int dim() const { return static_cast<int>(p_.size()); }

  /// Coordinate probability, 1-based.
  double p(int i) const;

  const std::vector<double>& probabilities() const { return p_; }

  /// Mass of a vertex: product over coordinates of p_i (bit 1) or 1-p_i
  /// (bit 0). Evaluated in log space when any coordinate is within 1e-3 of
  /// the boundary, to keep long products from underflowing.
  double vertex_mass(const Vertex& x) const;

  /// p_x + p_y for the endpoints of e. Equals the product of the shared
  /// coordinates' factors, since the endpoints differ only along e's
  /// dimension and those two factors sum to 1.
  double endpoint_mass_sum(const Edge& e) const;

  /// Edge mass (p_x + p_y) / d.
  double edge_mass(const Edge& e) const;

  /// One draw from the product distribution. Consumes exactly d Bernoulli
  /// draws, coordinates in ascending order.
  Vertex sample_vertex(SeededRng& rng) const;

  /// One draw from the edge distribution. Two-stage: pick the dimension i
  /// uniformly, then draw every other coordinate from its Bernoulli. The
  /// result has probability (shared mass) / d, which is exactly the edge
  /// mass of the produced edge.
  Edge sample_edge(SeededRng& rng) const;

  /// Masses of all 2^d vertices in packed-index order (d <= kMaxExhaustiveDim).
  std::vector<double> enumerate_vertex_masses() const;

  /// Masses of all edges, aligned with all_edges(d) (d <= kMaxExhaustiveDim).
  std::vector<std::pair<Edge, double>> enumerate_edge_masses() const;

 private:
  void check_dim(int d, const char* who) const;

  std::vector<double> p_;
  std::vector<double> log_p_;
  std::vector<double> log_q_;
  bool log_space_ = false;
};

}  // namespace liptest

#endif  // LIPTEST_PRODUCT_DISTRIBUTION_HPP_
