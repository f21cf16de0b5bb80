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

#ifndef LIPTEST_REPAIR_HPP_
#define LIPTEST_REPAIR_HPP_

#include "liptest/function_oracle.hpp"
#include "liptest/product_distribution.hpp"

namespace liptest {

/// Dimension-by-dimension correction of a grid-valued table into a Lipschitz
/// one. Verification companion for the sampling tester: it works on full
/// tables only and favors reproducibility over speed.

/// Nearest multiple of delta; exact midpoints round toward -inf. Requires
/// delta in (0, 1] with integer 1/delta. -inf passes through.
double round_to_grid(double v, double delta);

/// One application of the asymmetric gap-shrink step to a violated edge
/// (|f(x) - f(y)| > 1, x the lower-valued endpoint):
///   heavier x (larger Hamming weight):  x += (1-p_i)*delta, y -= p_i*delta
///   lighter x:                          x += p_i*delta,     y -= (1-p_i)*delta
/// Either way the gap shrinks by exactly delta. Intermediate values leave the
/// grid (the returned table is real-valued); rounding happens once per
/// dimension in repair_dimension. Throws if the edge is not violated or has
/// non-finite endpoint values.
DenseFunction basic_operator_step(const DenseFunction& f, const Edge& e,
                                  double p_i, double delta);

/// Fixpoint of the basic step along dimension i: sweeps the dimension-i
/// matching in lexicographic base order, repeating until a clean pass. Each
/// violated edge loses exactly delta of gap per sweep, so the pass count is
/// bounded by ceil(ImD(f) / delta); exceeding that bound (plus slack) throws.
/// Returns the pre-rounding table.
DenseFunction basic_operator_fixpoint(const DenseFunction& f, int i,
                                      const ProductDistribution& dist);

/// basic_operator_fixpoint followed by one rounding pass back onto f's grid.
/// The result has no violated edges along dimension i: the fixpoint leaves
/// dimension-i gaps at most 1 and rounding cannot push a gap past 1.
DenseFunction repair_dimension(const DenseFunction& f, int i,
                               const ProductDistribution& dist);

/// Repairs dimensions 1..d in order. The output passes the exhaustive
/// Lipschitz check: dimension i is cleaned at step i and later steps do not
/// reintroduce violations there.
DenseFunction full_repair(const DenseFunction& f, const ProductDistribution& dist);

/// max(0, (p_x + p_y) * (|f(x) - f(y)| - 1)): positive exactly on violated
/// edges, and weighs the excess gap by the endpoint masses.
double violation_score_edge(const DenseFunction& f, const Edge& e,
                            const ProductDistribution& dist);

/// Sum of edge scores over the dimension-i matching.
double violation_score_dimension(const DenseFunction& f, int i,
                                 const ProductDistribution& dist);

}  // namespace liptest

#endif  // LIPTEST_REPAIR_HPP_
