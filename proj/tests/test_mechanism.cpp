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

#include "liptest/mechanism.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "liptest/json_io.hpp"

using namespace liptest;

TEST_CASE("table mechanisms validate their rows") {
  CHECK_THROWS_AS(TableMechanism(1, {"a", "b"}, {{0.5, 0.6}, {0.5, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TableMechanism(1, {"a", "b"}, {{1.2, -0.2}, {0.5, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TableMechanism(1, {"a"}, {{1.0}}), std::invalid_argument);
  CHECK_NOTHROW(TableMechanism(1, {"a", "b"}, {{0.5, 0.5}, {0.25, 0.75}}));
}

TEST_CASE("randomized response probabilities") {
  SUBCASE("q = 1/2 ignores the dataset entirely") {
    const RandomizedResponseMechanism mech(3, 0.5);
    for (std::uint64_t b = 0; b < 8; ++b) {
      CHECK(mech.prob(Vertex(b, 3), 0) == 0.5);
      CHECK(mech.prob(Vertex(b, 3), 1) == 0.5);
    }
  }
  SUBCASE("q = 0.25 at d=1") {
    const RandomizedResponseMechanism mech(1, 0.25);
    CHECK(mech.prob(Vertex::from_bitstring("0"), 0) == 0.75);
    CHECK(mech.prob(Vertex::from_bitstring("0"), 1) == 0.25);
    CHECK(mech.prob(Vertex::from_bitstring("1"), 0) == 0.25);
    CHECK(mech.prob(Vertex::from_bitstring("1"), 1) == 0.75);
  }
}

TEST_CASE("truncated geometric rows are normalized up to d = 10") {
  for (int d = 1; d <= 10; ++d) {
    const TruncatedGeometricMechanism mech(d, std::log(2.0));
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << d); ++b) {
      double sum = 0.0;
      for (int o = 0; o <= d; ++o) sum += mech.prob(Vertex(b, d), o);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("deterministic projection is one-hot") {
  const DeterministicProjectionMechanism mech(3, 2);
  for (std::uint64_t b = 0; b < 8; ++b) {
    const Vertex x(b, 3);
    CHECK(mech.prob(x, x.bit(2)) == 1.0);
    CHECK(mech.prob(x, 1 - x.bit(2)) == 0.0);
  }
}

TEST_CASE("builtin mechanism registry") {
  const auto rr = make_builtin_mechanism("randomized_response?q=0.25", 1);
  CHECK(rr->prob(Vertex::zero(1), 0) == 0.75);
  const auto tg = make_builtin_mechanism("truncated_geometric?alpha0=0.5", 4);
  CHECK(tg->num_outputs() == 5);
  CHECK_THROWS_AS(make_builtin_mechanism("nonsense", 2), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin_mechanism("randomized_response", 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_builtin_mechanism("randomized_response?q=oops", 2),
                  std::invalid_argument);
}

TEST_CASE("mechanism tables round-trip through JSON bit-exactly") {
  const TruncatedGeometricMechanism original(3, 0.8342);
  const Json j = mechanism_to_json(original);

  const std::string path = "mechanism_roundtrip_test.json";
  {
    std::ofstream out(path);
    out << j.dump(2);
  }
  const auto loaded = load_mechanism_table(path);
  std::remove(path.c_str());

  REQUIRE(loaded->dim() == 3);
  REQUIRE(loaded->num_outputs() == 4);
  for (std::uint64_t b = 0; b < 8; ++b) {
    for (int o = 0; o < 4; ++o) {
      // Bit-exact: the serializer emits round-trip-precise decimals.
      CHECK(loaded->prob(Vertex(b, 3), o) == original.prob(Vertex(b, 3), o));
    }
  }
}
