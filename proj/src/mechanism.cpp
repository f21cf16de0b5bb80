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

#include <cmath>
#include <stdexcept>

#include "liptest/name_params.hpp"

namespace liptest {

namespace {

constexpr double kRowSumTolerance = 1e-9;

void check_output_index(int o, int count, const char* who) {
  if (o < 0 || o >= count) {
    throw std::invalid_argument(std::string(who) + ": unknown output index");
  }
}

}  // namespace

TableMechanism::TableMechanism(int dim, std::vector<std::string> labels,
                               std::vector<std::vector<double>> rows)
    : dim_(dim), labels_(std::move(labels)), rows_(std::move(rows)) {
  if (dim_ < 1 || dim_ > kMaxExhaustiveDim) {
    throw std::invalid_argument("TableMechanism: dimension must be in [1, " +
                                std::to_string(kMaxExhaustiveDim) + "]");
  }
  if (labels_.empty()) {
    throw std::invalid_argument("TableMechanism: output set must be non-empty");
  }
  if (rows_.size() != (std::size_t{1} << dim_)) {
    throw std::invalid_argument("TableMechanism: need one row per dataset");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != labels_.size()) {
      throw std::invalid_argument("TableMechanism: row " + std::to_string(r) +
                                  " has the wrong number of probabilities");
    }
    double sum = 0.0;
    for (double p : rows_[r]) {
      if (!(p >= 0.0) || !(p <= 1.0)) {
        throw std::invalid_argument("TableMechanism: probabilities must lie in [0, 1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw std::invalid_argument("TableMechanism: row " + std::to_string(r) +
                                  " sums to " + std::to_string(sum) +
                                  ", expected 1 within 1e-9");
    }
  }
}

double TableMechanism::prob(const Vertex& dataset, int output_index) const {
  if (dataset.dim() != dim_) {
    throw std::invalid_argument("TableMechanism: dataset dimension mismatch");
  }
  check_output_index(output_index, num_outputs(), "TableMechanism");
  return rows_[dataset.index()][static_cast<std::size_t>(output_index)];
}

RandomizedResponseMechanism::RandomizedResponseMechanism(int dim, double q)
    : dim_(dim), q_(q), labels_{"0", "1"} {
  if (dim_ < 1 || dim_ > kMaxSamplingDim) {
    throw std::invalid_argument("RandomizedResponse: dimension out of range");
  }
  if (!(q >= 0.0) || !(q <= 1.0)) {
    throw std::invalid_argument("RandomizedResponse: q must lie in [0, 1]");
  }
}

double RandomizedResponseMechanism::prob(const Vertex& dataset,
                                         int output_index) const {
  if (dataset.dim() != dim_) {
    throw std::invalid_argument("RandomizedResponse: dataset dimension mismatch");
  }
  check_output_index(output_index, 2, "RandomizedResponse");
  return output_index == dataset.bit(1) ? 1.0 - q_ : q_;
}

TruncatedGeometricMechanism::TruncatedGeometricMechanism(int dim, double alpha0)
    : dim_(dim), alpha0_(alpha0) {
  if (dim_ < 1 || dim_ > kMaxSamplingDim) {
    throw std::invalid_argument("TruncatedGeometric: dimension out of range");
  }
  if (!(alpha0 > 0.0)) {
    throw std::invalid_argument("TruncatedGeometric: alpha0 must be positive");
  }
  labels_.reserve(static_cast<std::size_t>(dim_) + 1);
  for (int o = 0; o <= dim_; ++o) labels_.push_back(std::to_string(o));

  const double t = std::exp(-alpha0);
  by_weight_.assign(static_cast<std::size_t>(dim_) + 1,
                    std::vector<double>(static_cast<std::size_t>(dim_) + 1, 0.0));
  for (int s = 0; s <= dim_; ++s) {
    for (int o = 0; o <= dim_; ++o) {
      double p;
      if (o == 0) {
        p = std::pow(t, s) / (1.0 + t);
      } else if (o == dim_) {
        p = std::pow(t, dim_ - s) / (1.0 + t);
      } else {
        p = (1.0 - t) / (1.0 + t) * std::pow(t, std::abs(o - s));
      }
      by_weight_[static_cast<std::size_t>(s)][static_cast<std::size_t>(o)] = p;
    }
  }
}

double TruncatedGeometricMechanism::prob(const Vertex& dataset,
                                         int output_index) const {
  if (dataset.dim() != dim_) {
    throw std::invalid_argument("TruncatedGeometric: dataset dimension mismatch");
  }
  check_output_index(output_index, num_outputs(), "TruncatedGeometric");
  return by_weight_[static_cast<std::size_t>(hamming_weight(dataset))]
                   [static_cast<std::size_t>(output_index)];
}

DeterministicProjectionMechanism::DeterministicProjectionMechanism(int dim,
                                                                   int coordinate)
    : dim_(dim), coordinate_(coordinate), labels_{"0", "1"} {
  if (dim_ < 1 || dim_ > kMaxSamplingDim) {
    throw std::invalid_argument("DeterministicProjection: dimension out of range");
  }
  if (coordinate_ < 1 || coordinate_ > dim_) {
    throw std::invalid_argument("DeterministicProjection: coordinate out of range");
  }
}

double DeterministicProjectionMechanism::prob(const Vertex& dataset,
                                              int output_index) const {
  if (dataset.dim() != dim_) {
    throw std::invalid_argument("DeterministicProjection: dataset dimension mismatch");
  }
  check_output_index(output_index, 2, "DeterministicProjection");
  return output_index == dataset.bit(coordinate_) ? 1.0 : 0.0;
}

std::unique_ptr<MechanismOracle> make_builtin_mechanism(const std::string& name_spec,
                                                        int dim) {
  const NameParams spec = parse_name_params(name_spec);
  if (spec.name == "randomized_response") {
    return std::make_unique<RandomizedResponseMechanism>(
        dim, spec.require_double("q"));
  }
  if (spec.name == "truncated_geometric") {
    return std::make_unique<TruncatedGeometricMechanism>(
        dim, spec.require_double("alpha0"));
  }
  if (spec.name == "deterministic_projection") {
    return std::make_unique<DeterministicProjectionMechanism>(
        dim, spec.has("i") ? spec.require_int("i") : 1);
  }
  throw std::invalid_argument("unknown builtin mechanism '" + spec.name + "'");
}

}  // namespace liptest
