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

#ifndef LIPTEST_FUNCTION_ORACLE_HPP_
#define LIPTEST_FUNCTION_ORACLE_HPP_

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "liptest/hypercube.hpp"

namespace liptest {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

/// |a - b| on the extended reals used for function values: two -inf values
/// are treated as equal (gap 0); -inf against a finite value gives +inf.
inline double extended_gap(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) {
    return (a == b) ? 0.0 : kPosInf;
  }
  return std::abs(a - b);
}

enum class RangeKind {
  kDeltaGrid,  // finite values are integer multiples of a grid step
  kReal,
};

/// Point-query access to a function on {0,1}^d. Implementations must be
/// deterministic (same vertex, same value) and safe for concurrent reads.
class FunctionOracle {
 public:
  virtual ~FunctionOracle() = default;
  virtual int dim() const = 0;
  virtual double evaluate(const Vertex& x) const = 0;
  virtual RangeKind range_kind() const = 0;
  /// Grid step for kDeltaGrid oracles; 0 otherwise.
  virtual double grid_delta() const { return 0.0; }
};

/// A full 2^d table of extended-real values. delta > 0 marks a grid-valued
/// table: every finite entry must be an integer multiple of delta (within
/// 1e-9) and 1/delta must be an integer. NaN and +inf entries are rejected.
struct DenseFunction {
  int dim = 0;
  double delta = 0.0;
  std::vector<double> values;

  DenseFunction() = default;
  DenseFunction(int dim, std::vector<double> values, double delta = 0.0);

  double value(const Vertex& x) const { return values[x.index()]; }
  double& value(const Vertex& x) { return values[x.index()]; }
  std::size_t size() const { return values.size(); }
};

class DenseFunctionOracle : public FunctionOracle {
 public:
  explicit DenseFunctionOracle(DenseFunction f) : f_(std::move(f)) {}

  int dim() const override { return f_.dim; }
  double evaluate(const Vertex& x) const override { return f_.value(x); }
  RangeKind range_kind() const override {
    return f_.delta > 0.0 ? RangeKind::kDeltaGrid : RangeKind::kReal;
  }
  double grid_delta() const override { return f_.delta; }

  const DenseFunction& table() const { return f_; }

 private:
  DenseFunction f_;
};

/// f(x) = number of 1-coordinates. Integer-valued, so it sits on every grid
/// whose step divides 1.
class HammingWeightOracle : public FunctionOracle {
 public:
  explicit HammingWeightOracle(int dim) : dim_(dim) {}
  int dim() const override { return dim_; }
  double evaluate(const Vertex& x) const override {
    return static_cast<double>(hamming_weight(x));
  }
  RangeKind range_kind() const override { return RangeKind::kDeltaGrid; }
  double grid_delta() const override { return 1.0; }

 private:
  int dim_;
};

/// f(x) = scale * x_1.
class ScaledDictatorOracle : public FunctionOracle {
 public:
  ScaledDictatorOracle(int dim, double scale) : dim_(dim), scale_(scale) {}
  int dim() const override { return dim_; }
  double evaluate(const Vertex& x) const override { return scale_ * x.bit(1); }
  RangeKind range_kind() const override {
    return integral_scale() ? RangeKind::kDeltaGrid : RangeKind::kReal;
  }
  double grid_delta() const override { return integral_scale() ? 1.0 : 0.0; }

 private:
  bool integral_scale() const {
    return std::abs(scale_ - std::round(scale_)) < 1e-12;
  }
  int dim_;
  double scale_;
};

class ConstantOracle : public FunctionOracle {
 public:
  ConstantOracle(int dim, double value) : dim_(dim), value_(value) {}
  int dim() const override { return dim_; }
  double evaluate(const Vertex&) const override { return value_; }
  RangeKind range_kind() const override { return RangeKind::kReal; }

 private:
  int dim_;
  double value_;
};

/// Pass-through wrapper that counts queries and optionally records the full
/// query sequence. Used to audit query complexity and replay determinism.
class CountingOracle : public FunctionOracle {
 public:
  explicit CountingOracle(const FunctionOracle& inner, bool record_log = false)
      : inner_(inner), record_(record_log) {}

  int dim() const override { return inner_.dim(); }
  double evaluate(const Vertex& x) const override {
    ++count_;
    if (record_) log_.push_back(x);
    return inner_.evaluate(x);
  }
  RangeKind range_kind() const override { return inner_.range_kind(); }
  double grid_delta() const override { return inner_.grid_delta(); }

  long long count() const { return count_; }
  const std::vector<Vertex>& log() const { return log_; }

 private:
  const FunctionOracle& inner_;
  bool record_;
  mutable long long count_ = 0;
  mutable std::vector<Vertex> log_;
};

/// Builds a builtin function from a name spec such as
///   "hamming-weight", "scaled-dictator?k=4", "constant?value=0.7",
///   "random-lipschitz?seed=5".
std::unique_ptr<FunctionOracle> make_builtin_function(const std::string& name_spec,
                                                      int dim);

}  // namespace liptest

#endif  // LIPTEST_FUNCTION_ORACLE_HPP_
