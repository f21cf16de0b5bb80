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

#include "liptest/repair.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liptest {

namespace {

constexpr double kGapGuard = 1e-9;

void check_grid_delta(double delta) {
  if (!(delta > 0.0) || !(delta <= 1.0)) {
    throw std::invalid_argument("repair: delta must lie in (0, 1]");
  }
  const double inv = 1.0 / delta;
  if (std::abs(inv - std::round(inv)) > 1e-9) {
    throw std::invalid_argument("repair: 1/delta must be an integer");
  }
}

void check_repairable(const DenseFunction& f) {
  check_grid_delta(f.delta);
  for (double v : f.values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("repair: function values must be finite");
    }
  }
}

// In-place basic step on raw values. Returns false when the edge is fine.
bool apply_basic_step(std::vector<double>& values, const Edge& e, double p_i,
                      double delta) {
  const auto [a, b] = e.endpoints();
  double& va = values[a.index()];
  double& vb = values[b.index()];
  if (std::abs(va - vb) <= 1.0 + kGapGuard) return false;

  const bool a_is_lower = va < vb;
  double& lower = a_is_lower ? va : vb;
  double& upper = a_is_lower ? vb : va;
  const int lower_weight =
      a_is_lower ? hamming_weight(a) : hamming_weight(b);
  const int upper_weight =
      a_is_lower ? hamming_weight(b) : hamming_weight(a);

  if (lower_weight > upper_weight) {
    lower += (1.0 - p_i) * delta;
    upper -= p_i * delta;
  } else {
    lower += p_i * delta;
    upper -= (1.0 - p_i) * delta;
  }
  return true;
}

}  // namespace

double round_to_grid(double v, double delta) {
  check_grid_delta(delta);
  if (v == kNegInf) return v;
  if (!std::isfinite(v)) {
    throw std::invalid_argument("round_to_grid: value must be finite or -inf");
  }
  // ceil(q - 0.5) is round-to-nearest with midpoints going down.
  const double k = std::ceil(v / delta - 0.5);
  return k * delta;
}

DenseFunction basic_operator_step(const DenseFunction& f, const Edge& e,
                                  double p_i, double delta) {
  check_grid_delta(delta);
  if (!(p_i > 0.0) || !(p_i < 1.0)) {
    throw std::invalid_argument("basic_operator_step: p_i must lie in (0, 1)");
  }
  const auto [a, b] = e.endpoints();
  const double va = f.value(a);
  const double vb = f.value(b);
  if (!std::isfinite(va) || !std::isfinite(vb)) {
    throw std::invalid_argument(
        "basic_operator_step: endpoint values must be finite");
  }
  if (std::abs(va - vb) <= 1.0 + kGapGuard) {
    throw std::invalid_argument(
        "basic_operator_step: edge is not violated (|f(x)-f(y)| <= 1)");
  }
  std::vector<double> values = f.values;
  apply_basic_step(values, e, p_i, delta);
  // Intermediate values are off-grid by multiples of p_i*delta.
  return DenseFunction(f.dim, std::move(values), 0.0);
}

DenseFunction basic_operator_fixpoint(const DenseFunction& f, int i,
                                      const ProductDistribution& dist) {
  check_repairable(f);
  if (dist.dim() != f.dim) {
    throw std::invalid_argument("basic_operator_fixpoint: dimension mismatch");
  }
  if (i < 1 || i > f.dim) {
    throw std::invalid_argument("basic_operator_fixpoint: dimension index out of range");
  }

  const double p_i = dist.p(i);
  const auto matching = dimension_edges(f.dim, i);
  const auto [mn, mx] = std::minmax_element(f.values.begin(), f.values.end());
  const long long max_passes =
      static_cast<long long>(std::ceil((*mx - *mn) / f.delta)) + 2;

  std::vector<double> values = f.values;
  long long pass = 0;
  bool changed = true;
  while (changed) {
    if (++pass > max_passes) {
      throw std::logic_error(
          "basic_operator_fixpoint: pass bound exceeded; the gap-shrink "
          "invariant is broken");
    }
    changed = false;
    for (const Edge& e : matching) {
      changed |= apply_basic_step(values, e, p_i, f.delta);
    }
  }
  return DenseFunction(f.dim, std::move(values), 0.0);
}

DenseFunction repair_dimension(const DenseFunction& f, int i,
                               const ProductDistribution& dist) {
  DenseFunction fixed = basic_operator_fixpoint(f, i, dist);
  std::vector<double> rounded(fixed.values.size());
  for (std::size_t k = 0; k < fixed.values.size(); ++k) {
    rounded[k] = round_to_grid(fixed.values[k], f.delta);
  }
  DenseFunction out(f.dim, std::move(rounded), f.delta);
  for (const Edge& e : dimension_edges(f.dim, i)) {
    const auto [a, b] = e.endpoints();
    if (std::abs(out.value(a) - out.value(b)) > 1.0 + kGapGuard) {
      throw std::logic_error(
          "repair_dimension: post-rounding violation along the repaired "
          "dimension");
    }
  }
  return out;
}

DenseFunction full_repair(const DenseFunction& f, const ProductDistribution& dist) {
  check_repairable(f);
  DenseFunction current = f;
  for (int i = 1; i <= f.dim; ++i) {
    current = repair_dimension(current, i, dist);
  }
  return current;
}

double violation_score_edge(const DenseFunction& f, const Edge& e,
                            const ProductDistribution& dist) {
  const auto [a, b] = e.endpoints();
  const double gap = extended_gap(f.value(a), f.value(b));
  if (gap <= 1.0) return 0.0;
  const double mass = dist.vertex_mass(a) + dist.vertex_mass(b);
  return mass * (gap - 1.0);
}

double violation_score_dimension(const DenseFunction& f, int i,
                                 const ProductDistribution& dist) {
  double total = 0.0;
  for (const Edge& e : dimension_edges(f.dim, i)) {
    total += violation_score_edge(f, e, dist);
  }
  return total;
}

}  // namespace liptest
