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

#ifndef LIPTEST_JSON_IO_HPP_
#define LIPTEST_JSON_IO_HPP_

#include <memory>
#include <string>

#include <json.hpp>

#include "liptest/mechanism.hpp"
#include "liptest/oracle.hpp"
#include "liptest/privacy.hpp"
#include "liptest/tester.hpp"

namespace liptest {

// ordered_json keeps insertion order, so identical runs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Extended reals: finite values are JSON numbers, infinities the strings
/// "inf" / "-inf".
Json json_from_extended(double v);
double extended_from_json(const Json& j, const std::string& context);

/// Distribution spec: "uniform" (requires dim > 0) or a path to a JSON array
/// of coordinate probabilities. When dim > 0 the array length must match.
ProductDistribution load_distribution(const std::string& spec, int dim);

/// Function table file:
///   {"dim": 2, "delta": 0.5, "values": {"00": 0.0, "10": 2.0, ...}}
/// Keys are bitstrings (leftmost char = coordinate 1); all 2^dim keys must be
/// present. "delta" is optional (omit or 0 for a real-valued table). Values
/// may be the string "-inf".
DenseFunction load_function_table(const std::string& path);
Json function_to_json(const DenseFunction& f);

/// Mechanism table file:
///   {"dim": 1, "outputs": ["0", "1"], "table": {"0": [0.75, 0.25], ...}}
/// Each row lists one probability per output and must sum to 1 within 1e-9.
std::unique_ptr<MechanismOracle> load_mechanism_table(const std::string& path);
Json mechanism_to_json(const MechanismOracle& mech);

Json witness_to_json(const ViolationWitness& w);
Json tester_report_to_json(const TesterReport& report);
Json privacy_verdict_to_json(const PrivacyVerdict& verdict);
Json certificate_to_json(const DistanceCertificate& cert);

Json parse_json_file(const std::string& path);

}  // namespace liptest

#endif  // LIPTEST_JSON_IO_HPP_
