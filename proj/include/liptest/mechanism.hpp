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

#ifndef LIPTEST_MECHANISM_HPP_
#define LIPTEST_MECHANISM_HPP_

#include <memory>
#include <string>
#include <vector>

#include "liptest/hypercube.hpp"

namespace liptest {

/// A randomized mechanism over datasets in {0,1}^d with a finite output set,
/// exposed through exact output probabilities: prob(D, o) is the chance the
/// mechanism emits output o on dataset D. Lookups must be O(1)-ish and safe
/// for concurrent readers.
class MechanismOracle {
 public:
  virtual ~MechanismOracle() = default;
  virtual int dim() const = 0;
  virtual const std::vector<std::string>& output_labels() const = 0;
  virtual double prob(const Vertex& dataset, int output_index) const = 0;

  int num_outputs() const { return static_cast<int>(output_labels().size()); }
};

/// Dense probability table, one row per dataset (packed index order). Each
/// row must sum to 1 within 1e-9.
class TableMechanism : public MechanismOracle {
 public:
  TableMechanism(int dim, std::vector<std::string> labels,
                 std::vector<std::vector<double>> rows);

  int dim() const override { return dim_; }
  const std::vector<std::string>& output_labels() const override { return labels_; }
  double prob(const Vertex& dataset, int output_index) const override;

  const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  int dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<double>> rows_;
};

/// Reports the first coordinate of the dataset, flipped with probability q.
/// Outputs {"0", "1"}.
class RandomizedResponseMechanism : public MechanismOracle {
 public:
  RandomizedResponseMechanism(int dim, double q);

  int dim() const override { return dim_; }
  const std::vector<std::string>& output_labels() const override { return labels_; }
  double prob(const Vertex& dataset, int output_index) const override;

 private:
  int dim_;
  double q_;
  std::vector<std::string> labels_;
};

/// Geometric noise around s = sum of the dataset bits, truncated to
/// {0, ..., d}. With t = exp(-alpha0):
///   interior o:  (1-t)/(1+t) * t^|o-s|
///   o = 0:       t^s / (1+t)
///   o = d:       t^(d-s) / (1+t)
/// Each row sums to 1 and neighboring rows stay within a factor exp(alpha0).
class TruncatedGeometricMechanism : public MechanismOracle {
 public:
  TruncatedGeometricMechanism(int dim, double alpha0);

  int dim() const override { return dim_; }
  const std::vector<std::string>& output_labels() const override { return labels_; }
  double prob(const Vertex& dataset, int output_index) const override;

  double alpha0() const { return alpha0_; }

 private:
  int dim_;
  double alpha0_;
  std::vector<std::string> labels_;
  std::vector<std::vector<double>> by_weight_;  // [s][o]
};

/// Emits coordinate i of the dataset verbatim. Maximally non-private.
class DeterministicProjectionMechanism : public MechanismOracle {
 public:
  DeterministicProjectionMechanism(int dim, int coordinate);

  int dim() const override { return dim_; }
  const std::vector<std::string>& output_labels() const override { return labels_; }
  double prob(const Vertex& dataset, int output_index) const override;

 private:
  int dim_;
  int coordinate_;
  std::vector<std::string> labels_;
};

/// Builds a builtin mechanism from a name spec such as
///   "randomized_response?q=0.25", "truncated_geometric?alpha0=0.693",
///   "deterministic_projection?i=1".
std::unique_ptr<MechanismOracle> make_builtin_mechanism(const std::string& name_spec,
                                                        int dim);

}  // namespace liptest

#endif  // LIPTEST_MECHANISM_HPP_
