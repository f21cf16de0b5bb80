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

#include <cmath>
#include <stdexcept>
#include <string>

namespace liptest {

namespace {
constexpr double kLogSpaceThreshold = 1e-3;
}

ProductDistribution::ProductDistribution(std::vector<double> probabilities)
    : p_(std::move(probabilities)) {
  const int d = static_cast<int>(p_.size());
  if (d < 1 || d > kMaxSamplingDim) {
    throw std::invalid_argument("ProductDistribution: dimension must be in [1, " +
                                std::to_string(kMaxSamplingDim) + "]");
  }
  log_p_.resize(p_.size());
  log_q_.resize(p_.size());
  for (std::size_t k = 0; k < p_.size(); ++k) {
    const double pi = p_[k];
    if (!(pi > 0.0) || !(pi < 1.0)) {
      throw std::invalid_argument(
          "ProductDistribution: coordinate probabilities must lie strictly in "
          "(0, 1); got p_" + std::to_string(k + 1) + " = " + std::to_string(pi));
    }
    log_p_[k] = std::log(pi);
    log_q_[k] = std::log1p(-pi);
    if (pi < kLogSpaceThreshold || 1.0 - pi < kLogSpaceThreshold) {
      log_space_ = true;
    }
  }
}

ProductDistribution ProductDistribution::uniform(int d) {
  if (d < 1 || d > kMaxSamplingDim) {
    throw std::invalid_argument("ProductDistribution: dimension must be in [1, " +
                                std::to_string(kMaxSamplingDim) + "]");
  }
  return ProductDistribution(std::vector<double>(static_cast<std::size_t>(d), 0.5));
}

double ProductDistribution::p(int i) const {
  if (i < 1 || i > dim()) {
    throw std::out_of_range("ProductDistribution: coordinate index out of range");
  }
  return p_[static_cast<std::size_t>(i - 1)];
}

void ProductDistribution::check_dim(int d, const char* who) const {
  if (d != dim()) {
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  }
}

double ProductDistribution::vertex_mass(const Vertex& x) const {
  check_dim(x.dim(), "vertex_mass");
  if (log_space_) {
    double acc = 0.0;
    for (int i = 1; i <= dim(); ++i) {
      acc += x.bit(i) ? log_p_[static_cast<std::size_t>(i - 1)]
                      : log_q_[static_cast<std::size_t>(i - 1)];
    }
    return std::exp(acc);
  }
  double acc = 1.0;
  for (int i = 1; i <= dim(); ++i) {
    acc *= x.bit(i) ? p_[static_cast<std::size_t>(i - 1)]
                    : 1.0 - p_[static_cast<std::size_t>(i - 1)];
  }
  return acc;
}

double ProductDistribution::endpoint_mass_sum(const Edge& e) const {
  check_dim(e.dim(), "endpoint_mass_sum");
  const Vertex& base = e.base();
  if (log_space_) {
    double acc = 0.0;
    for (int i = 1; i <= dim(); ++i) {
      if (i == e.dimension()) continue;
      acc += base.bit(i) ? log_p_[static_cast<std::size_t>(i - 1)]
                         : log_q_[static_cast<std::size_t>(i - 1)];
    }
    return std::exp(acc);
  }
  double acc = 1.0;
  for (int i = 1; i <= dim(); ++i) {
    if (i == e.dimension()) continue;
    acc *= base.bit(i) ? p_[static_cast<std::size_t>(i - 1)]
                       : 1.0 - p_[static_cast<std::size_t>(i - 1)];
  }
  return acc;
}

double ProductDistribution::edge_mass(const Edge& e) const {
  return endpoint_mass_sum(e) / dim();
}

Vertex ProductDistribution::sample_vertex(SeededRng& rng) const {
  std::uint64_t bits = 0;
  for (int i = 1; i <= dim(); ++i) {
    if (rng.bernoulli(p_[static_cast<std::size_t>(i - 1)])) {
      bits |= std::uint64_t{1} << (i - 1);
    }
  }
  return Vertex(bits, dim());
}

Edge ProductDistribution::sample_edge(SeededRng& rng) const {
  const int d = dim();
  const int i = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(d)));
  std::uint64_t bits = 0;
  for (int j = 1; j <= d; ++j) {
    if (j == i) continue;
    if (rng.bernoulli(p_[static_cast<std::size_t>(j - 1)])) {
      bits |= std::uint64_t{1} << (j - 1);
    }
  }
  return Edge(Vertex(bits, d), i);
}

std::vector<double> ProductDistribution::enumerate_vertex_masses() const {
  if (dim() > kMaxExhaustiveDim) {
    throw std::invalid_argument(
        "enumerate_vertex_masses: dimension exceeds the exhaustive cap");
  }
  const std::uint64_t n = std::uint64_t{1} << dim();
  std::vector<double> out;
  out.reserve(n);
  for (std::uint64_t b = 0; b < n; ++b) {
    out.push_back(vertex_mass(Vertex(b, dim())));
  }
  return out;
}

std::vector<std::pair<Edge, double>> ProductDistribution::enumerate_edge_masses()
    const {
  if (dim() > kMaxExhaustiveDim) {
    throw std::invalid_argument(
        "enumerate_edge_masses: dimension exceeds the exhaustive cap");
  }
  std::vector<std::pair<Edge, double>> out;
  for (const Edge& e : all_edges(dim())) {
    out.emplace_back(e, edge_mass(e));
  }
  return out;
}

}  // namespace liptest
