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

#include <doctest.h>

#include <cmath>

#include "liptest/oracle.hpp"
#include "liptest/verify.hpp"

using namespace liptest;

TEST_CASE("round_to_grid picks the nearest multiple, midpoints go down") {
  CHECK(round_to_grid(1.5, 0.5) == 1.5);
  CHECK(round_to_grid(0.74, 0.5) == 0.5);
  CHECK(round_to_grid(0.76, 0.5) == doctest::Approx(1.0));
  CHECK(round_to_grid(0.25, 0.5) == 0.0);    // tie, toward -inf
  CHECK(round_to_grid(-0.25, 0.5) == -0.5);  // tie, toward -inf
  CHECK(round_to_grid(kNegInf, 0.5) == kNegInf);
  CHECK_THROWS_AS(round_to_grid(1.0, 0.3), std::invalid_argument);  // 1/0.3 not integer
}

TEST_CASE("rounding keeps unit gaps at most one") {
  CHECK(round_to_grid(0.0, 0.5) == 0.0);
  CHECK(round_to_grid(1.0, 0.5) == 1.0);
  SeededRng rng(41);
  const RoundingSafetyResult res =
      check_rounding_pair_safety(round_to_grid, 5000, rng);
  CHECK(res.failures == 0);
}

TEST_CASE("the safety checker catches a broken rounder") {
  // Rounds small magnitudes down but large ones up; a pair straddling the
  // cutoff can see its gap grow past 1.
  const auto bad_round = [](double v, double delta) {
    return std::abs(v) < 0.75 ? std::floor(v / delta) * delta
                              : std::ceil(v / delta) * delta;
  };
  SeededRng rng(43);
  const RoundingSafetyResult res = check_rounding_pair_safety(bad_round, 5000, rng);
  CHECK(res.failures > 0);
}

TEST_CASE("basic operator worked examples") {
  const ProductDistribution uniform1 = ProductDistribution::uniform(1);
  const Edge e(Vertex::zero(1), 1);

  SUBCASE("lower endpoint lighter: shift by p_i / 1 - p_i") {
    // f(0) = 0 < f(1) = 2; the lower-valued endpoint has the smaller weight.
    const DenseFunction f(1, {0.0, 2.0}, 0.5);
    const DenseFunction g = basic_operator_step(f, e, 0.5, 0.5);
    CHECK(g.values[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(g.values[1] == doctest::Approx(1.75).epsilon(1e-12));
  }
  SUBCASE("lower endpoint heavier: shifts swap") {
    // f(0) = 2 > f(1) = 0; the lower-valued endpoint has the larger weight.
    const DenseFunction f(1, {2.0, 0.0}, 0.5);
    const DenseFunction g = basic_operator_step(f, e, 0.9, 0.5);
    CHECK(g.values[1] == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(g.values[0] == doctest::Approx(1.55).epsilon(1e-12));
  }
  SUBCASE("each application shrinks the gap by exactly delta") {
    SeededRng rng(47);
    for (int rep = 0; rep < 100; ++rep) {
      const double delta = (rep % 2) ? 0.5 : 0.25;
      const double gap =
          1.0 + delta * (1 + static_cast<double>(rng.uniform_below(8)));
      const double base = rng.uniform01() * 4.0 - 2.0;
      const double lo = std::round(base / delta) * delta;
      const bool low_first = rng.bernoulli(0.5);
      const DenseFunction f(1, {low_first ? lo : lo + gap,
                                low_first ? lo + gap : lo}, delta);
      const double p_i = 0.05 + 0.9 * rng.uniform01();
      const DenseFunction g = basic_operator_step(f, e, p_i, delta);
      CHECK(std::abs(g.values[0] - g.values[1]) ==
            doctest::Approx(gap - delta).epsilon(1e-9));
    }
  }
  SUBCASE("non-violated edges are rejected") {
    const DenseFunction f(1, {0.0, 1.0}, 0.5);
    CHECK_THROWS_AS(basic_operator_step(f, e, 0.5, 0.5), std::invalid_argument);
  }
}

TEST_CASE("repair_dimension worked example and postcondition") {
  const ProductDistribution uniform1 = ProductDistribution::uniform(1);

  SUBCASE("d=1, gap 2: two basic steps land on (0.5, 1.5)") {
    const DenseFunction f(1, {0.0, 2.0}, 0.5);
    const DenseFunction g = repair_dimension(f, 1, uniform1);
    CHECK(g.values[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(g.values[1] == doctest::Approx(1.5).epsilon(1e-12));
  }
  SUBCASE("functions clean along i pass through unchanged") {
    const DenseFunction f(2, {0.0, 1.0, 0.5, 1.5}, 0.5);
    const DenseFunction g = repair_dimension(f, 1, ProductDistribution::uniform(2));
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(g.values[k] == doctest::Approx(f.values[k]).epsilon(1e-12));
    }
  }
  SUBCASE("no violated edges remain along the repaired dimension") {
    SeededRng rng(53);
    for (int rep = 0; rep < 100; ++rep) {
      const int d = 1 + static_cast<int>(rng.uniform_below(4));
      const double delta = (rep % 2) ? 0.25 : 0.1;
      const ProductDistribution dist = random_distribution(d, 0.1, 0.9, rng);
      const DenseFunction f = random_grid_function(
          d, delta, 1 + static_cast<int>(rng.uniform_below(20)), rng);
      for (int i = 1; i <= d; ++i) {
        const DenseFunction g = repair_dimension(f, i, dist);
        for (const Edge& e : dimension_edges(d, i)) {
          const auto [a, b] = e.endpoints();
          CHECK(std::abs(g.value(a) - g.value(b)) <= 1.0 + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("violation scores") {
  const ProductDistribution uniform2 = ProductDistribution::uniform(2);

  SUBCASE("zero exactly on non-violated edges") {
    const DenseFunction f(2, {0.0, 1.0, 0.0, 1.0}, 0.5);
    for (const Edge& e : all_edges(2)) {
      CHECK(violation_score_edge(f, e, uniform2) == 0.0);
    }
  }
  SUBCASE("worked value: quarter masses, gap 2") {
    const DenseFunction f(2, {0.0, 2.0, 0.0, 2.0}, 0.5);
    const Edge e(Vertex::from_bitstring("00"), 1);
    CHECK(violation_score_edge(f, e, uniform2) ==
          doctest::Approx(0.5 * (2.0 - 1.0)).epsilon(1e-12));
  }
  SUBCASE("d=1 uniform, values (0,2): dimension score 1") {
    const DenseFunction f(1, {0.0, 2.0}, 0.5);
    CHECK(violation_score_dimension(f, 1, ProductDistribution::uniform(1)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("dimension score equals the brute edge-by-edge sum") {
    SeededRng rng(59);
    for (int rep = 0; rep < 50; ++rep) {
      const int d = 3;
      const ProductDistribution dist = random_distribution(d, 0.1, 0.9, rng);
      const DenseFunction f = random_grid_function(d, 0.25, 12, rng);
      for (int i = 1; i <= d; ++i) {
        double total = 0.0;
        for (const Edge& e : dimension_edges(d, i)) {
          const auto [a, b] = e.endpoints();
          const double gap = std::abs(f.value(a) - f.value(b));
          if (gap > 1.0) {
            total += (dist.vertex_mass(a) + dist.vertex_mass(b)) * (gap - 1.0);
          }
        }
        CHECK(violation_score_dimension(f, i, dist) ==
              doctest::Approx(total).epsilon(1e-12));
      }
    }
  }
  SUBCASE("grid-valued violated edges sit inside the score envelope") {
    SeededRng rng(61);
    for (int rep = 0; rep < 50; ++rep) {
      const int d = 2 + static_cast<int>(rng.uniform_below(2));
      const double delta = 0.1;
      const ProductDistribution dist = random_distribution(d, 0.1, 0.9, rng);
      const DenseFunction f = random_grid_function(d, delta, 25, rng);
      const double imd = image_diameter_exact(f);
      for (const Edge& e : all_edges(d)) {
        const auto [a, b] = e.endpoints();
        if (std::abs(f.value(a) - f.value(b)) <= 1.0 + 1e-9) continue;
        const double score = violation_score_edge(f, e, dist);
        const double pair_mass = dist.vertex_mass(a) + dist.vertex_mass(b);
        CHECK(score >= delta * pair_mass - 1e-12);
        CHECK(score <= imd * pair_mass + 1e-12);
      }
    }
  }
}

TEST_CASE("full repair") {
  SUBCASE("Lipschitz inputs are fixpoints") {
    SeededRng rng(67);
    const ProductDistribution dist = random_distribution(3, 0.2, 0.8, rng);
    const DenseFunction f = random_lipschitz_function(3, rng, 0.25);
    const DenseFunction g = full_repair(f, dist);
    for (std::size_t k = 0; k < f.values.size(); ++k) {
      CHECK(g.values[k] == doctest::Approx(f.values[k]).epsilon(1e-12));
    }
  }
  SUBCASE("d=2 dictator becomes Lipschitz") {
    const DenseFunction f(2, {0.0, 2.0, 0.0, 2.0}, 0.5);
    const DenseFunction g = full_repair(f, ProductDistribution::uniform(2));
    CHECK(is_lipschitz_exhaustive(g, 1.0));
  }
  SUBCASE("large image diameters terminate within the pass bound") {
    std::vector<double> values(4, 0.0);
    values[1] = 100.0;
    values[3] = 100.0;
    const DenseFunction f(2, std::move(values), 0.5);
    const DenseFunction g = full_repair(f, ProductDistribution::uniform(2));
    CHECK(is_lipschitz_exhaustive(g, 1.0));
  }
}

TEST_CASE("dense tables validate their grid") {
  CHECK_THROWS_AS(DenseFunction(1, {0.3, 0.5}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(DenseFunction(1, {0.0, kPosInf}), std::invalid_argument);
  CHECK_THROWS_AS(
      DenseFunction(1, {0.0, std::numeric_limits<double>::quiet_NaN()}),
      std::invalid_argument);
  CHECK_THROWS_AS(DenseFunction(2, {0.0, 1.0}, 0.5), std::invalid_argument);
  CHECK_NOTHROW(DenseFunction(1, {kNegInf, 0.5}, 0.5));
}
