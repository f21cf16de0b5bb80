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

#ifndef LIPTEST_ORACLE_HPP_
#define LIPTEST_ORACLE_HPP_

#include <utility>
#include <vector>

#include "liptest/function_oracle.hpp"
#include "liptest/product_distribution.hpp"
#include "liptest/rng.hpp"

namespace liptest {

/// Exact ground truth for dense functions at small d. Everything here is
/// brute force by design: these routines certify what the sampling paths
/// only estimate.

/// True iff every pair satisfies |f(x) - f(y)| <= c * hamming_distance(x, y).
/// On the hypercube it suffices to check edges: gaps compose along shortest
/// paths. Tolerance 1e-9 absorbs float dust on grid tables.
bool is_lipschitz_exhaustive(const DenseFunction& f, double c = 1.0);

/// max f - min f. A constant table (including all -inf) has diameter 0; a
/// table mixing -inf with finite values has diameter +inf.
double image_diameter_exact(const DenseFunction& f);

/// Total edge-distribution mass of the edges violated at threshold 1.
double violated_edge_mass(const DenseFunction& f, const ProductDistribution& dist);

/// delta * (epsilon - d^2 * delta) / (d * image_diameter): the guaranteed
/// lower bound on violated edge mass for a grid function at distance epsilon
/// from Lipschitz. May be <= 0, in which case the bound is vacuous.
/// Requires image_diameter > 0.
double violated_mass_lower_bound(double epsilon, int d, double delta,
                                 double image_diameter);

/// All unordered pairs (x, y) with |f(x) - f(y)| > c * hamming_distance,
/// as packed-index pairs (first < second).
std::vector<std::pair<std::uint32_t, std::uint32_t>> violated_pairs(
    const DenseFunction& f, double c = 1.0);

/// Least 1-Lipschitz extension of a partial assignment:
///   g(x) = min over (y, v) in partial of v + hamming_distance(x, y).
/// The partial values must themselves be 1-Lipschitz across the assigned
/// vertices (duplicate vertices must agree); otherwise throws.
DenseFunction mcshane_extend(const std::vector<std::pair<Vertex, double>>& partial,
                             int d);

/// Exact distance certificate: the minimum-mass vertex set whose removal
/// leaves f c-Lipschitz, plus a c-Lipschitz completion that agrees with f
/// off that set.
struct DistanceCertificate {
  double distance = 0.0;
  std::vector<Vertex> witness_set;  // sorted by packed index
  DenseFunction completion;
};

/// Branch-and-bound search for the certificate. The removal problem is a
/// minimum-mass vertex cover of the violated-pair graph; branching picks an
/// uncovered pair and commits one endpoint. Deterministic exploration order,
/// so ties resolve identically on every run. Requires d <= kMaxDistanceDim.
DistanceCertificate exact_distance_to_lipschitz(const DenseFunction& f,
                                                const ProductDistribution& dist,
                                                double c = 1.0);

/// Same certificate by enumerating all 2^(2^d) removal sets. Test oracle,
/// d <= 4 only.
DistanceCertificate exact_distance_by_enumeration(const DenseFunction& f,
                                                  const ProductDistribution& dist,
                                                  double c = 1.0);

/// Random 1-Lipschitz table: draws a handful of anchor vertices, assigns
/// them mutually consistent values, and extends with mcshane_extend. When
/// snap_delta > 0 the values are rounded to that grid (rounding never pushes
/// an edge gap above 1, so the result stays Lipschitz) and the table is
/// marked grid-valued. anchors = 0 picks a random anchor count.
DenseFunction random_lipschitz_function(int d, SeededRng& rng,
                                        double snap_delta = 0.0, int anchors = 0);

}  // namespace liptest

#endif  // LIPTEST_ORACLE_HPP_
