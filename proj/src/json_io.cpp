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

#include "liptest/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace liptest {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

std::string verdict_string(Verdict v) {
  return v == Verdict::kYes ? "YES" : "NO";
}

}  // namespace

Json json_from_extended(double v) {
  if (v == kNegInf) return "-inf";
  if (v == kPosInf) return "inf";
  return v;
}

double extended_from_json(const Json& j, const std::string& context) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "-inf") return kNegInf;
    if (s == "inf") return kPosInf;
  }
  fail(context + ": expected a number or \"inf\"/\"-inf\"");
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail("malformed JSON in " + path + ": " + e.what());
  }
}

ProductDistribution load_distribution(const std::string& spec, int dim) {
  if (spec == "uniform") {
    if (dim < 1) fail("distribution 'uniform' needs a dimension");
    return ProductDistribution::uniform(dim);
  }
  const Json j = parse_json_file(spec);
  if (!j.is_array() || j.empty()) {
    fail("distribution file must hold a non-empty JSON array of probabilities");
  }
  std::vector<double> p;
  p.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_number()) fail("distribution entries must be numbers");
    p.push_back(entry.get<double>());
  }
  if (dim > 0 && static_cast<int>(p.size()) != dim) {
    fail("distribution file has " + std::to_string(p.size()) +
         " entries but the run dimension is " + std::to_string(dim));
  }
  return ProductDistribution(std::move(p));
}

DenseFunction load_function_table(const std::string& path) {
  const Json j = parse_json_file(path);
  if (!j.is_object() || !j.contains("dim") || !j.contains("values")) {
    fail("function table must be an object with 'dim' and 'values'");
  }
  const int d = j.at("dim").get<int>();
  if (d < 1 || d > kMaxExhaustiveDim) {
    fail("function table: dim must be in [1, " + std::to_string(kMaxExhaustiveDim) + "]");
  }
  const double delta = j.value("delta", 0.0);
  const Json& values = j.at("values");
  if (!values.is_object()) fail("function table: 'values' must be an object");
  const std::size_t n = std::size_t{1} << d;
  if (values.size() != n) {
    fail("function table: expected " + std::to_string(n) + " entries, found " +
         std::to_string(values.size()));
  }
  std::vector<double> table(n, 0.0);
  std::vector<char> seen(n, 0);
  for (const auto& [key, value] : values.items()) {
    const Vertex x = Vertex::from_bitstring(key);
    if (x.dim() != d) fail("function table: key '" + key + "' has the wrong length");
    if (seen[x.index()]) fail("function table: duplicate key '" + key + "'");
    seen[x.index()] = 1;
    table[x.index()] = extended_from_json(value, "function table entry '" + key + "'");
  }
  return DenseFunction(d, std::move(table), delta);
}

Json function_to_json(const DenseFunction& f) {
  Json values = Json::object();
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << f.dim); ++b) {
    const Vertex x(b, f.dim);
    values[x.to_bitstring()] = json_from_extended(f.values[b]);
  }
  Json out;
  out["dim"] = f.dim;
  if (f.delta > 0.0) out["delta"] = f.delta;
  out["values"] = std::move(values);
  return out;
}

std::unique_ptr<MechanismOracle> load_mechanism_table(const std::string& path) {
  const Json j = parse_json_file(path);
  if (!j.is_object() || !j.contains("dim") || !j.contains("outputs") ||
      !j.contains("table")) {
    fail("mechanism table must be an object with 'dim', 'outputs' and 'table'");
  }
  const int d = j.at("dim").get<int>();
  if (d < 1 || d > kMaxExhaustiveDim) {
    fail("mechanism table: dim must be in [1, " + std::to_string(kMaxExhaustiveDim) + "]");
  }
  const Json& outputs = j.at("outputs");
  if (!outputs.is_array() || outputs.empty()) {
    fail("mechanism table: 'outputs' must be a non-empty array");
  }
  std::vector<std::string> labels;
  labels.reserve(outputs.size());
  for (const auto& o : outputs) {
    labels.push_back(o.is_string() ? o.get<std::string>() : o.dump());
  }

  const Json& table = j.at("table");
  if (!table.is_object()) fail("mechanism table: 'table' must be an object");
  const std::size_t n = std::size_t{1} << d;
  if (table.size() != n) {
    fail("mechanism table: expected " + std::to_string(n) + " rows, found " +
         std::to_string(table.size()));
  }
  std::vector<std::vector<double>> rows(n);
  std::vector<char> seen(n, 0);
  for (const auto& [key, row] : table.items()) {
    const Vertex x = Vertex::from_bitstring(key);
    if (x.dim() != d) fail("mechanism table: key '" + key + "' has the wrong length");
    if (seen[x.index()]) fail("mechanism table: duplicate key '" + key + "'");
    seen[x.index()] = 1;
    if (!row.is_array() || row.size() != labels.size()) {
      fail("mechanism table: row '" + key + "' must list one probability per output");
    }
    std::vector<double> probs;
    probs.reserve(row.size());
    for (const auto& p : row) {
      if (!p.is_number()) fail("mechanism table: probabilities must be numbers");
      probs.push_back(p.get<double>());
    }
    rows[x.index()] = std::move(probs);
  }
  return std::make_unique<TableMechanism>(d, std::move(labels), std::move(rows));
}

Json mechanism_to_json(const MechanismOracle& mech) {
  Json table = Json::object();
  const int d = mech.dim();
  if (d > kMaxExhaustiveDim) {
    fail("mechanism_to_json: dimension exceeds the dense cap");
  }
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << d); ++b) {
    const Vertex x(b, d);
    Json row = Json::array();
    for (int o = 0; o < mech.num_outputs(); ++o) row.push_back(mech.prob(x, o));
    table[x.to_bitstring()] = std::move(row);
  }
  Json out;
  out["dim"] = d;
  out["outputs"] = mech.output_labels();
  out["table"] = std::move(table);
  return out;
}

Json witness_to_json(const ViolationWitness& w) {
  Json out;
  out["kind"] = w.kind == ViolationWitness::Kind::kEdge ? "edge" : "diameter";
  out["pair"] = Json::array({w.a.to_bitstring(), w.b.to_bitstring()});
  out["values"] = Json::array({json_from_extended(w.fa), json_from_extended(w.fb)});
  out["gap"] = json_from_extended(w.gap);
  out["threshold"] = w.threshold;
  if (w.path_edge.has_value()) {
    Json pe;
    pe["pair"] = Json::array(
        {w.path_edge->a.to_bitstring(), w.path_edge->b.to_bitstring()});
    pe["values"] = Json::array({json_from_extended(w.path_edge->fa),
                                json_from_extended(w.path_edge->fb)});
    pe["gap"] = json_from_extended(w.path_edge->gap);
    out["path_edge"] = std::move(pe);
  }
  return out;
}

Json tester_report_to_json(const TesterReport& report) {
  Json out;
  out["verdict"] = verdict_string(report.verdict);
  out["vertex_samples"] = report.vertex_samples;
  out["edge_samples"] = report.edge_samples;
  out["sample_diameter"] = json_from_extended(report.sample_diameter);
  out["point_queries"] = report.point_queries;
  out["seed"] = report.seed;
  out["witness"] = report.witness.has_value() ? witness_to_json(*report.witness)
                                              : Json(nullptr);
  return out;
}

Json privacy_verdict_to_json(const PrivacyVerdict& verdict) {
  Json out;
  out["verdict"] = verdict_string(verdict.verdict);
  out["resolved_delta"] = verdict.resolved_delta;
  out["seed"] = verdict.seed;
  if (verdict.witness.has_value()) {
    const PrivacyWitness& w = *verdict.witness;
    Json jw;
    jw["dataset"] = w.dataset_a.to_bitstring();
    jw["neighbor"] = w.dataset_b.to_bitstring();
    jw["output"] = w.output_label;
    jw["output_index"] = w.output_index;
    jw["prob_dataset"] = w.prob_a;
    jw["prob_neighbor"] = w.prob_b;
    jw["ratio"] = json_from_extended(w.ratio);
    jw["log_ratio"] = json_from_extended(w.log_ratio);
    out["witness"] = std::move(jw);
  } else {
    out["witness"] = nullptr;
  }
  if (verdict.guarantee.has_value()) {
    Json g;
    g["alpha_effective"] = verdict.guarantee->alpha_effective;
    g["gamma_slack"] = verdict.guarantee->gamma_slack;
    g["beta_mass"] = verdict.guarantee->beta_mass;
    g["confidence"] = verdict.guarantee->confidence;
    out["guarantee"] = std::move(g);
  } else {
    out["guarantee"] = nullptr;
  }
  Json reports = Json::array();
  for (const TesterReport& r : verdict.per_output) {
    reports.push_back(tester_report_to_json(r));
  }
  out["per_output_reports"] = std::move(reports);
  return out;
}

Json certificate_to_json(const DistanceCertificate& cert) {
  Json out;
  out["distance"] = cert.distance;
  Json witness = Json::array();
  for (const Vertex& v : cert.witness_set) witness.push_back(v.to_bitstring());
  out["witness_set"] = std::move(witness);
  out["completion"] = function_to_json(cert.completion);
  return out;
}

}  // namespace liptest
