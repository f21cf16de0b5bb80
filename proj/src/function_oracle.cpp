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

#include "liptest/function_oracle.hpp"

#include <stdexcept>

#include "liptest/name_params.hpp"
#include "liptest/oracle.hpp"
#include "liptest/rng.hpp"

namespace liptest {

DenseFunction::DenseFunction(int dim_in, std::vector<double> values_in, double delta_in)
    : dim(dim_in), delta(delta_in), values(std::move(values_in)) {
  if (dim < 1 || dim > kMaxExhaustiveDim) {
    throw std::invalid_argument("DenseFunction: dimension must be in [1, " +
                                std::to_string(kMaxExhaustiveDim) + "]");
  }
  if (values.size() != (std::size_t{1} << dim)) {
    throw std::invalid_argument("DenseFunction: table must have exactly 2^dim entries");
  }
  if (delta < 0.0 || delta > 1.0) {
    throw std::invalid_argument("DenseFunction: delta must lie in [0, 1]");
  }
  if (delta > 0.0) {
    const double inv = 1.0 / delta;
    if (std::abs(inv - std::round(inv)) > 1e-9) {
      throw std::invalid_argument("DenseFunction: 1/delta must be an integer");
    }
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double v = values[k];
    if (std::isnan(v) || v == kPosInf) {
      throw std::invalid_argument("DenseFunction: values must be finite or -inf");
    }
    if (delta > 0.0 && std::isfinite(v)) {
      const double nearest = std::round(v / delta) * delta;
      if (std::abs(v - nearest) > 1e-9) {
        throw std::invalid_argument(
            "DenseFunction: entry " + std::to_string(k) +
            " is not a multiple of delta");
      }
    }
  }
}

std::unique_ptr<FunctionOracle> make_builtin_function(const std::string& name_spec,
                                                      int dim) {
  const NameParams spec = parse_name_params(name_spec);
  if (spec.name == "hamming-weight") {
    return std::make_unique<HammingWeightOracle>(dim);
  }
  if (spec.name == "scaled-dictator") {
    const double k = spec.get_double("k", static_cast<double>(dim));
    return std::make_unique<ScaledDictatorOracle>(dim, k);
  }
  if (spec.name == "constant") {
    return std::make_unique<ConstantOracle>(dim, spec.get_double("value", 0.0));
  }
  if (spec.name == "random-lipschitz") {
    if (dim > kMaxExhaustiveDim) {
      throw std::invalid_argument(
          "random-lipschitz: dimension exceeds the dense-table cap");
    }
    SeededRng rng(spec.get_u64("seed", 0));
    return std::make_unique<DenseFunctionOracle>(random_lipschitz_function(dim, rng));
  }
  throw std::invalid_argument("unknown builtin function '" + spec.name + "'");
}

}  // namespace liptest
