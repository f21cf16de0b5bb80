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

#ifndef LIPTEST_HYPERCUBE_HPP_
#define LIPTEST_HYPERCUBE_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liptest {

// Sampling routines pack vertices into one 64-bit word.
inline constexpr int kMaxSamplingDim = 62;
// Full-table enumeration (dense functions, exhaustive checks).
inline constexpr int kMaxExhaustiveDim = 20;
// Exact distance search (combinatorial, keep it desk scale).
inline constexpr int kMaxDistanceDim = 12;

/// A vertex of the hypercube {0,1}^d, packed into a 64-bit word.
/// Coordinates are 1-based in the public interface; coordinate i is stored
/// at word bit i-1.
class Vertex {
 public:
  Vertex() = default;

  Vertex(std::uint64_t bits, int dim) : bits_(bits), dim_(dim) {
    if (dim < 1 || dim > kMaxSamplingDim) {
      throw std::invalid_argument("Vertex: dimension must be in [1, " +
                                  std::to_string(kMaxSamplingDim) + "]");
    }
    if (dim < 64 && (bits >> dim) != 0) {
      throw std::invalid_argument("Vertex: bits exceed the dimension");
    }
  }

  static Vertex zero(int dim) { return Vertex(0, dim); }

  int dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }

  /// Value of coordinate i (1-based).
  int bit(int i) const {
    check_coordinate(i);
    return static_cast<int>((bits_ >> (i - 1)) & 1u);
  }

  /// The vertex with coordinate i flipped.
  Vertex with_flipped(int i) const {
    check_coordinate(i);
    return Vertex(bits_ ^ (std::uint64_t{1} << (i - 1)), dim_);
  }

  /// Row index into dense 2^d tables.
  std::size_t index() const { return static_cast<std::size_t>(bits_); }

  /// Leftmost character is coordinate 1.
  std::string to_bitstring() const;
  static Vertex from_bitstring(const std::string& s);

  friend bool operator==(const Vertex& a, const Vertex& b) = default;

 private:
  void check_coordinate(int i) const {
    if (i < 1 || i > dim_) {
      throw std::out_of_range("Vertex: coordinate index out of range");
    }
  }

  std::uint64_t bits_ = 0;
  int dim_ = 0;
};

/// Number of 1-coordinates of x.
inline int hamming_weight(const Vertex& x) { return std::popcount(x.bits()); }

/// Number of coordinates in which x and y differ.
inline int hamming_distance(const Vertex& x, const Vertex& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("hamming_distance: dimension mismatch");
  }
  return std::popcount(x.bits() ^ y.bits());
}

/// A hypercube edge: the pair {base, base with coordinate i flipped to 1}.
/// The base endpoint always has coordinate i equal to 0, so every edge has a
/// unique representation.
class Edge {
 public:
  Edge(Vertex base, int dimension) : base_(base), dimension_(dimension) {
    if (dimension < 1 || dimension > base.dim()) {
      throw std::invalid_argument("Edge: dimension index out of range");
    }
    if (base.bit(dimension) != 0) {
      throw std::invalid_argument(
          "Edge: base endpoint must have bit 0 along the edge dimension");
    }
  }

  const Vertex& base() const { return base_; }
  int dimension() const { return dimension_; }
  int dim() const { return base_.dim(); }

  /// Returns (bit-0 endpoint, bit-1 endpoint).
  std::pair<Vertex, Vertex> endpoints() const {
    return {base_, base_.with_flipped(dimension_)};
  }

  friend bool operator==(const Edge& a, const Edge& b) = default;

 private:
  Vertex base_;
  int dimension_ = 0;
};

inline std::pair<Vertex, Vertex> edge_endpoints(const Edge& e) {
  return e.endpoints();
}

/// All 2^d vertices in packed-index order. Requires d <= kMaxExhaustiveDim.
std::vector<Vertex> all_vertices(int d);

/// The dimension-i perfect matching, in lexicographic base order.
std::vector<Edge> dimension_edges(int d, int i);

/// All d * 2^(d-1) edges, grouped by dimension. Requires d <= kMaxExhaustiveDim.
std::vector<Edge> all_edges(int d);

}  // namespace liptest

#endif  // LIPTEST_HYPERCUBE_HPP_
