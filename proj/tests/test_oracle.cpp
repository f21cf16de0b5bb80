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

#include "liptest/oracle.hpp"

#include <doctest.h>

#include <cmath>

#include "liptest/verify.hpp"

using namespace liptest;

namespace {

DenseFunction hamming_weight_table(int d) {
  std::vector<double> values(std::size_t{1} << d);
  for (std::uint64_t b = 0; b < values.size(); ++b) {
    values[b] = static_cast<double>(hamming_weight(Vertex(b, d)));
  }
  return DenseFunction(d, std::move(values), 1.0);
}

DenseFunction dictator_table(int d, double scale, double delta) {
  std::vector<double> values(std::size_t{1} << d);
  for (std::uint64_t b = 0; b < values.size(); ++b) {
    values[b] = scale * static_cast<double>(b & 1u);
  }
  return DenseFunction(d, std::move(values), delta);
}

}  // namespace

TEST_CASE("exhaustive Lipschitz check") {
  CHECK(is_lipschitz_exhaustive(hamming_weight_table(5), 1.0));
  const DenseFunction f = dictator_table(3, 2.0, 0.5);
  CHECK_FALSE(is_lipschitz_exhaustive(f, 1.0));
  CHECK(is_lipschitz_exhaustive(f, 2.0));
  CHECK(is_lipschitz_exhaustive(f, image_diameter_exact(f)));
}

TEST_CASE("image diameter") {
  CHECK(image_diameter_exact(DenseFunction(2, {1.5, 1.5, 1.5, 1.5})) == 0.0);
  CHECK(image_diameter_exact(hamming_weight_table(4)) == 4.0);
  CHECK(image_diameter_exact(dictator_table(2, 2.0, 0.5)) == 2.0);
  CHECK(image_diameter_exact(DenseFunction(1, {kNegInf, 3.0})) == kPosInf);
  CHECK(image_diameter_exact(DenseFunction(1, {kNegInf, kNegInf})) == 0.0);
}

TEST_CASE("violated edge mass") {
  SeededRng rng(21);
  const ProductDistribution uniform1 = ProductDistribution::uniform(1);
  const ProductDistribution uniform2 = ProductDistribution::uniform(2);

  CHECK(violated_edge_mass(hamming_weight_table(3),
                           ProductDistribution::uniform(3)) == 0.0);
  CHECK(violated_edge_mass(DenseFunction(1, {0.0, 2.0}, 0.5), uniform1) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(violated_edge_mass(dictator_table(2, 2.0, 0.5), uniform2) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("violated-mass lower bound formula") {
  CHECK(violated_mass_lower_bound(0.3, 2, 0.1, 1.0) <= 0.0);  // eps <= d^2*delta
  CHECK(violated_mass_lower_bound(0.5, 2, 0.01, 2.0) ==
        doctest::Approx(0.00115).epsilon(1e-12));
  CHECK_THROWS_AS(violated_mass_lower_bound(0.5, 2, 0.01, 0.0),
                  std::invalid_argument);
}

TEST_CASE("mcshane extension") {
  SUBCASE("total Lipschitz assignment extends to itself") {
    const DenseFunction f = hamming_weight_table(3);
    std::vector<std::pair<Vertex, double>> partial;
    for (std::uint64_t b = 0; b < 8; ++b) {
      partial.emplace_back(Vertex(b, 3), f.values[b]);
    }
    const DenseFunction g = mcshane_extend(partial, 3);
    for (std::uint64_t b = 0; b < 8; ++b) {
      CHECK(g.values[b] == doctest::Approx(f.values[b]).epsilon(1e-12));
    }
  }
  SUBCASE("single anchor at zero gives the hamming weight") {
    const DenseFunction g = mcshane_extend({{Vertex::zero(4), 0.0}}, 4);
    for (std::uint64_t b = 0; b < 16; ++b) {
      CHECK(g.values[b] == doctest::Approx(hamming_weight(Vertex(b, 4))));
    }
  }
  SUBCASE("random partials extend to Lipschitz interpolants") {
    SeededRng rng(23);
    for (int rep = 0; rep < 50; ++rep) {
      const DenseFunction g = random_lipschitz_function(4, rng);
      CHECK(is_lipschitz_exhaustive(g, 1.0));
    }
  }
  SUBCASE("inconsistent partials are rejected") {
    CHECK_THROWS_AS(
        mcshane_extend({{Vertex::from_bitstring("00"), 0.0},
                        {Vertex::from_bitstring("01"), 5.0}},
                       2),
        std::invalid_argument);
  }
}

TEST_CASE("distance certificates on worked instances") {
  SUBCASE("Lipschitz input: distance zero, empty witness") {
    const DistanceCertificate cert = exact_distance_to_lipschitz(
        hamming_weight_table(3), ProductDistribution::uniform(3));
    CHECK(cert.distance == 0.0);
    CHECK(cert.witness_set.empty());
  }
  SUBCASE("d=2 dictator: half the mass must move") {
    const DistanceCertificate cert = exact_distance_to_lipschitz(
        dictator_table(2, 2.0, 0.5), ProductDistribution::uniform(2));
    CHECK(cert.distance == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cert.witness_set.size() == 2);
    CHECK(is_lipschitz_exhaustive(cert.completion, 1.0));
  }
  SUBCASE("d=1 skewed: the lighter endpoint moves") {
    const DistanceCertificate cert = exact_distance_to_lipschitz(
        DenseFunction(1, {0.0, 5.0}), ProductDistribution({0.3}));
    CHECK(cert.distance == doctest::Approx(0.3).epsilon(1e-12));
    REQUIRE(cert.witness_set.size() == 1);
    CHECK(cert.witness_set[0] == Vertex::from_bitstring("1"));
  }
  SUBCASE("a -inf entry is a removable vertex") {
    const DistanceCertificate cert = exact_distance_to_lipschitz(
        DenseFunction(1, {kNegInf, 0.0}), ProductDistribution({0.3}));
    CHECK(cert.distance == doctest::Approx(0.3).epsilon(1e-12));
    REQUIRE(cert.witness_set.size() == 1);
    CHECK(cert.witness_set[0] == Vertex::from_bitstring("1"));
    CHECK(cert.completion.values[0] == kNegInf);
  }
}

TEST_CASE("search and enumeration agree on the distance") {
  SeededRng rng(29);
  for (int rep = 0; rep < 100; ++rep) {
    const int d = 1 + static_cast<int>(rng.uniform_below(3));
    const double delta = (rep % 2 == 0) ? 0.5 : 0.25;
    const ProductDistribution dist = random_distribution(d, 0.1, 0.9, rng);
    const DenseFunction f = random_grid_function(
        d, delta, 1 + static_cast<int>(rng.uniform_below(8)), rng);
    const DistanceCertificate a = exact_distance_to_lipschitz(f, dist);
    const DistanceCertificate b = exact_distance_by_enumeration(f, dist);
    CHECK(a.distance == doctest::Approx(b.distance).epsilon(1e-12));
  }
}

TEST_CASE("certificate invariants hold on random instances") {
  SeededRng rng(31);
  for (int rep = 0; rep < 60; ++rep) {
    const int d = 1 + static_cast<int>(rng.uniform_below(4));
    const double c = (rep % 3 == 0) ? 2.0 : 1.0;
    const ProductDistribution dist = random_distribution(d, 0.1, 0.9, rng);
    const DenseFunction f = random_grid_function(
        d, 0.25, 1 + static_cast<int>(rng.uniform_below(12)), rng);
    const DistanceCertificate cert = exact_distance_to_lipschitz(f, dist, c);

    double witness_mass = 0.0;
    std::vector<char> in_cover(std::size_t{1} << d, 0);
    for (const Vertex& v : cert.witness_set) {
      witness_mass += dist.vertex_mass(v);
      in_cover[v.index()] = 1;
    }
    CHECK(cert.distance == doctest::Approx(witness_mass).epsilon(1e-12));
    CHECK(is_lipschitz_exhaustive(cert.completion, c));
    for (std::uint64_t b = 0; b < f.values.size(); ++b) {
      if (!in_cover[b]) {
        CHECK(cert.completion.values[b] == doctest::Approx(f.values[b]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("random Lipschitz generator respects the grid option") {
  SeededRng rng(37);
  for (int rep = 0; rep < 40; ++rep) {
    const int d = 1 + static_cast<int>(rng.uniform_below(6));
    const DenseFunction f = random_lipschitz_function(d, rng, 0.1);
    CHECK(f.delta == 0.1);
    CHECK(is_lipschitz_exhaustive(f, 1.0));
  }
}
