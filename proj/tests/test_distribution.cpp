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

#include "liptest/product_distribution.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

#include "liptest/verify.hpp"

using namespace liptest;

TEST_CASE("degenerate coordinate probabilities are rejected") {
  CHECK_THROWS_AS(ProductDistribution({0.5, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(ProductDistribution({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ProductDistribution({}), std::invalid_argument);
  CHECK_THROWS_AS(ProductDistribution(std::vector<double>(63, 0.5)),
                  std::invalid_argument);
  CHECK_NOTHROW(ProductDistribution(std::vector<double>(62, 0.5)));
}

TEST_CASE("vertex_mass matches direct substitution") {
  const ProductDistribution half({0.5, 0.5});
  CHECK(half.vertex_mass(Vertex::from_bitstring("01")) == doctest::Approx(0.25).epsilon(1e-12));

  const ProductDistribution single({0.9});
  CHECK(single.vertex_mass(Vertex::from_bitstring("1")) == doctest::Approx(0.9).epsilon(1e-12));

  const ProductDistribution mixed({0.9, 0.2, 0.5});
  CHECK(mixed.vertex_mass(Vertex::from_bitstring("101")) ==
        doctest::Approx(0.9 * 0.8 * 0.5).epsilon(1e-12));

  CHECK_THROWS_AS(mixed.vertex_mass(Vertex::from_bitstring("10")),
                  std::invalid_argument);
}

TEST_CASE("vertex masses are multiplicative across coordinates") {
  SeededRng rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const int d = 1 + static_cast<int>(rng.uniform_below(8));
    const ProductDistribution dist = random_distribution(d, 0.05, 0.95, rng);
    const Vertex x(rng.next_u64() & ((1ull << d) - 1), d);
    double expected = 1.0;
    for (int i = 1; i <= d; ++i) {
      expected *= x.bit(i) ? dist.p(i) : 1.0 - dist.p(i);
    }
    CHECK(dist.vertex_mass(x) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("vertex and edge masses sum to one") {
  SeededRng rng(11);
  for (int d : {1, 3, 6, 12}) {
    const ProductDistribution dist = random_distribution(d, 0.05, 0.95, rng);
    double vertex_total = 0.0;
    for (double m : dist.enumerate_vertex_masses()) vertex_total += m;
    CHECK(vertex_total == doctest::Approx(1.0).epsilon(1e-12));

    double edge_total = 0.0;
    for (const auto& [e, m] : dist.enumerate_edge_masses()) edge_total += m;
    CHECK(edge_total == doctest::Approx(1.0).epsilon(1e-12));

    // Each dimension's matching carries endpoint-mass exactly 1.
    for (int i = 1; i <= d; ++i) {
      double matching_total = 0.0;
      for (const Edge& e : dimension_edges(d, i)) {
        matching_total += dist.endpoint_mass_sum(e);
      }
      CHECK(matching_total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("edge_mass worked values") {
  const ProductDistribution uniform2 = ProductDistribution::uniform(2);
  for (const Edge& e : all_edges(2)) {
    CHECK(uniform2.edge_mass(e) == doctest::Approx(0.25).epsilon(1e-12));
  }

  const ProductDistribution p3({0.3});
  CHECK(p3.edge_mass(Edge(Vertex::zero(1), 1)) == doctest::Approx(1.0).epsilon(1e-12));

  // All four edge masses at p = (0.9, 0.5), checked against the direct
  // endpoint-sum route; the dimension-2 edge over x_1 = 1 carries 0.45.
  const ProductDistribution skew({0.9, 0.5});
  double total = 0.0;
  for (const auto& [e, m] : skew.enumerate_edge_masses()) {
    const auto [x, y] = e.endpoints();
    CHECK(m == doctest::Approx((skew.vertex_mass(x) + skew.vertex_mass(y)) / 2)
                   .epsilon(1e-12));
    total += m;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(skew.edge_mass(Edge(Vertex::from_bitstring("10"), 2)) ==
        doctest::Approx(0.45).epsilon(1e-12));
}

TEST_CASE("log-space and direct products agree") {
  // A 1e-6 coordinate forces the log-space path; compare against a direct
  // long-double product.
  std::vector<double> p{1e-6, 0.3, 0.99, 0.5, 1e-5, 0.7};
  const ProductDistribution dist(p);
  SeededRng rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    const Vertex x(rng.uniform_below(1u << 6), 6);
    long double expected = 1.0L;
    for (int i = 1; i <= 6; ++i) {
      expected *= x.bit(i) ? static_cast<long double>(p[i - 1])
                           : 1.0L - static_cast<long double>(p[i - 1]);
    }
    CHECK(dist.vertex_mass(x) ==
          doctest::Approx(static_cast<double>(expected)).epsilon(1e-9));
  }
}

TEST_CASE("identical seeds give identical sample streams") {
  const ProductDistribution dist({0.9, 0.2, 0.5});
  SeededRng a(42), b(42);
  for (int k = 0; k < 100; ++k) {
    CHECK(dist.sample_vertex(a) == dist.sample_vertex(b));
  }
  SeededRng c(42), e(42);
  for (int k = 0; k < 100; ++k) {
    CHECK(dist.sample_edge(c) == dist.sample_edge(e));
  }
  CHECK(SeededRng(1).derive(0).next_u64() != SeededRng(1).derive(1).next_u64());
}

TEST_CASE("sample_vertex frequencies track the coordinate probabilities") {
  SUBCASE("p = 0.999") {
    const ProductDistribution dist({0.999});
    SeededRng rng(7);
    long long ones = 0;
    const int n = 100000;
    for (int k = 0; k < n; ++k) ones += dist.sample_vertex(rng).bit(1);
    CHECK(std::abs(static_cast<double>(ones) / n - 0.999) < 0.005);
  }
  SUBCASE("uniform d=2 hits all four vertices evenly") {
    const ProductDistribution dist = ProductDistribution::uniform(2);
    SeededRng rng(8);
    std::map<std::uint64_t, long long> counts;
    const int n = 100000;
    for (int k = 0; k < n; ++k) ++counts[dist.sample_vertex(rng).bits()];
    for (std::uint64_t b = 0; b < 4; ++b) {
      CHECK(std::abs(static_cast<double>(counts[b]) / n - 0.25) < 0.01);
    }
  }
}

TEST_CASE("sample_edge follows the edge distribution") {
  SUBCASE("d=1 always yields the unique edge") {
    const ProductDistribution dist({0.3});
    SeededRng rng(9);
    for (int k = 0; k < 50; ++k) {
      const Edge e = dist.sample_edge(rng);
      CHECK(e.dimension() == 1);
      CHECK(e.base() == Vertex::zero(1));
    }
  }
  SUBCASE("uniform d=2: four edges, 0.25 each") {
    const ProductDistribution dist = ProductDistribution::uniform(2);
    SeededRng rng(10);
    std::map<std::pair<std::uint64_t, int>, long long> counts;
    const int n = 100000;
    for (int k = 0; k < n; ++k) {
      const Edge e = dist.sample_edge(rng);
      ++counts[{e.base().bits(), e.dimension()}];
    }
    CHECK(counts.size() == 4);
    for (const auto& [key, c] : counts) {
      CHECK(std::abs(static_cast<double>(c) / n - 0.25) < 0.01);
    }
  }
  SUBCASE("d=3 skewed: empirical frequency within 0.01 of every edge mass") {
    const ProductDistribution dist({0.9, 0.2, 0.5});
    SeededRng rng(11);
    std::map<std::pair<std::uint64_t, int>, long long> counts;
    const int n = 100000;
    for (int k = 0; k < n; ++k) {
      const Edge e = dist.sample_edge(rng);
      ++counts[{e.base().bits(), e.dimension()}];
    }
    for (const auto& [e, mass] : dist.enumerate_edge_masses()) {
      const double freq =
          static_cast<double>(counts[{e.base().bits(), e.dimension()}]) / n;
      CHECK(std::abs(freq - mass) < 0.01);
    }
  }
}

TEST_CASE("two-stage sampler is exact in total variation up to d = 4") {
  SeededRng seeder(13);
  for (int d = 1; d <= 4; ++d) {
    const ProductDistribution dist = random_distribution(d, 0.1, 0.9, seeder);
    SeededRng rng = seeder.derive(static_cast<std::uint64_t>(d));
    std::map<std::pair<std::uint64_t, int>, long long> counts;
    const long long n = 1000000;
    for (long long k = 0; k < n; ++k) {
      const Edge e = dist.sample_edge(rng);
      ++counts[{e.base().bits(), e.dimension()}];
    }
    double tv = 0.0;
    for (const auto& [e, mass] : dist.enumerate_edge_masses()) {
      const double freq =
          static_cast<double>(counts[{e.base().bits(), e.dimension()}]) / n;
      tv += std::abs(freq - mass);
    }
    tv /= 2.0;
    CHECK(tv < 0.01);
  }
}
