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

#include "liptest/hypercube.hpp"

namespace liptest {

std::string Vertex::to_bitstring() const {
  std::string s(static_cast<std::size_t>(dim_), '0');
  for (int i = 1; i <= dim_; ++i) {
    if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

Vertex Vertex::from_bitstring(const std::string& s) {
  if (s.empty() || s.size() > static_cast<std::size_t>(kMaxSamplingDim)) {
    throw std::invalid_argument("Vertex: bitstring length must be in [1, " +
                                std::to_string(kMaxSamplingDim) + "]");
  }
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '1') {
      bits |= std::uint64_t{1} << k;
    } else if (s[k] != '0') {
      throw std::invalid_argument("Vertex: bitstring may contain only 0/1");
    }
  }
  return Vertex(bits, static_cast<int>(s.size()));
}

namespace {

void check_enumeration_dim(int d) {
  if (d < 1 || d > kMaxExhaustiveDim) {
    throw std::invalid_argument("hypercube enumeration: dimension must be in [1, " +
                                std::to_string(kMaxExhaustiveDim) + "]");
  }
}

}  // namespace

std::vector<Vertex> all_vertices(int d) {
  check_enumeration_dim(d);
  const std::uint64_t n = std::uint64_t{1} << d;
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::uint64_t b = 0; b < n; ++b) out.emplace_back(b, d);
  return out;
}

std::vector<Edge> dimension_edges(int d, int i) {
  check_enumeration_dim(d);
  if (i < 1 || i > d) {
    throw std::invalid_argument("dimension_edges: dimension index out of range");
  }
  const std::uint64_t n = std::uint64_t{1} << d;
  const std::uint64_t mask = std::uint64_t{1} << (i - 1);
  std::vector<Edge> out;
  out.reserve(n / 2);
  for (std::uint64_t b = 0; b < n; ++b) {
    if ((b & mask) == 0) out.emplace_back(Vertex(b, d), i);
  }
  return out;
}

std::vector<Edge> all_edges(int d) {
  check_enumeration_dim(d);
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(d) << (d - 1));
  for (int i = 1; i <= d; ++i) {
    auto m = dimension_edges(d, i);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

}  // namespace liptest
