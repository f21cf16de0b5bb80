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

#include "liptest/cli.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "liptest/json_io.hpp"
#include "liptest/verify.hpp"

namespace liptest {

namespace {

constexpr const char* kBuiltinPrefix = "builtin:";

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

bool is_builtin(const std::string& spec) {
  return spec.rfind(kBuiltinPrefix, 0) == 0;
}

std::string builtin_name(const std::string& spec) {
  return spec.substr(std::string(kBuiltinPrefix).size());
}

Json distribution_json(const ProductDistribution& dist, const std::string& spec) {
  if (spec == "uniform") return "uniform";
  return Json(dist.probabilities());
}

struct CommonOptions {
  std::uint64_t seed = 0;
  bool seed_given = false;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--seed", common.seed, "RNG seed (default: OS entropy)")
      ->check([&common](const std::string&) {
        common.seed_given = true;
        return std::string{};
      });
  cmd->add_option("--threads", common.threads, "worker thread cap")
      ->check(CLI::Range(1, 256));
}

std::uint64_t resolve_seed(CommonOptions& common) {
  if (!common.seed_given) common.seed = entropy_seed();
  return common.seed;
}

// Dimension resolution: explicit --dim wins but must agree with whatever the
// input files declare.
int merge_dim(int current, int found, const char* source) {
  if (current > 0 && found > 0 && current != found) {
    throw std::invalid_argument(std::string("--dim disagrees with ") + source);
  }
  return current > 0 ? current : found;
}

struct FunctionInput {
  std::unique_ptr<FunctionOracle> oracle;
  int dim = 0;
};

FunctionInput resolve_function(const std::string& spec, int dim) {
  FunctionInput out;
  if (is_builtin(spec)) {
    if (dim < 1) {
      throw std::invalid_argument("builtin functions need --dim");
    }
    out.oracle = make_builtin_function(builtin_name(spec), dim);
    out.dim = dim;
    return out;
  }
  DenseFunction table = load_function_table(spec);
  out.dim = merge_dim(dim, table.dim, "the function table");
  out.oracle = std::make_unique<DenseFunctionOracle>(std::move(table));
  return out;
}

struct MechanismInput {
  std::unique_ptr<MechanismOracle> oracle;
  int dim = 0;
};

MechanismInput resolve_mechanism(const std::string& spec, int dim) {
  MechanismInput out;
  if (is_builtin(spec)) {
    if (dim < 1) {
      throw std::invalid_argument("builtin mechanisms need --dim");
    }
    out.oracle = make_builtin_mechanism(builtin_name(spec), dim);
    out.dim = dim;
    return out;
  }
  out.oracle = load_mechanism_table(spec);
  out.dim = merge_dim(dim, out.oracle->dim(), "the mechanism table");
  return out;
}

Json report_frame(const std::string& subcommand) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "liptest";
  j["subcommand"] = subcommand;
  return j;
}

void emit(const Json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

struct LipschitzArgs {
  int dim = 0;
  std::string function;
  std::string dist = "uniform";
  double epsilon_prime = 0.0;
  double omega = 0.0;
  double delta = 0.0;
  std::string mode = "auto";
  CommonOptions common;
};

int run_test_lipschitz(LipschitzArgs& a, std::ostream& out, std::ostream& err) {
  FunctionInput fn = resolve_function(a.function, a.dim);
  if (a.dist != "uniform") {
    // A distribution file may pin the dimension when nothing else did.
    const ProductDistribution probe = load_distribution(a.dist, 0);
    fn.dim = merge_dim(fn.dim, probe.dim(), "the distribution file");
    if (is_builtin(a.function) && fn.oracle->dim() != fn.dim) {
      fn = resolve_function(a.function, fn.dim);
    }
  }
  if (fn.dim < 1) throw std::invalid_argument("cannot infer the dimension; pass --dim");
  const ProductDistribution dist = load_distribution(a.dist, fn.dim);

  TesterConfig cfg;
  cfg.epsilon_prime = a.epsilon_prime;
  cfg.omega = a.omega;
  cfg.delta = a.delta;
  if (a.mode == "auto") {
    cfg.mode = fn.oracle->range_kind() == RangeKind::kDeltaGrid
                   ? TesterMode::kGrid
                   : TesterMode::kReal;
  } else if (a.mode == "grid") {
    cfg.mode = TesterMode::kGrid;
  } else if (a.mode == "real") {
    cfg.mode = TesterMode::kReal;
  } else {
    throw std::invalid_argument("--mode must be grid, real or auto");
  }

  const std::uint64_t seed = resolve_seed(a.common);
  err << "testing " << a.function << " at d=" << fn.dim << "\n";
  const TesterReport report =
      test_lipschitz(*fn.oracle, dist, cfg, SeededRng(seed));

  Json j = report_frame("test-lipschitz");
  Json config;
  config["dim"] = fn.dim;
  config["function"] = a.function;
  config["distribution"] = distribution_json(dist, a.dist);
  config["mode"] = cfg.mode == TesterMode::kGrid ? "grid" : "real";
  config["epsilon_prime"] = cfg.epsilon_prime;
  config["epsilon"] = cfg.epsilon(fn.dim);
  config["omega"] = cfg.omega;
  config["delta"] = cfg.delta;
  config["seed"] = seed;
  config["rng"] = SeededRng::kVersion;
  config["threads"] = a.common.threads;
  j["config"] = std::move(config);
  j.update(tester_report_to_json(report));
  j.erase("seed");  // already in config
  emit(j, out);
  return report.verdict == Verdict::kYes ? 0 : 1;
}

struct PrivacyArgs {
  int dim = 0;
  std::string mech;
  std::string dist = "uniform";
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::optional<double> delta;
  std::string dataset;  // privgen only
  CommonOptions common;
};

Json privacy_config_json(const PrivacyArgs& a, const MechanismInput& mech,
                         const ProductDistribution& dist, const GdpParams& params,
                         std::uint64_t seed) {
  Json config;
  config["dim"] = mech.dim;
  config["mechanism"] = a.mech;
  config["outputs"] = mech.oracle->output_labels();
  config["distribution"] = distribution_json(dist, a.dist);
  config["alpha"] = params.alpha;
  config["beta"] = params.beta;
  config["gamma"] = params.gamma;
  config["delta"] = params.resolved_delta(mech.dim, mech.oracle->num_outputs());
  config["epsilon_prime"] = params.beta / mech.oracle->num_outputs();
  config["omega"] = params.gamma / mech.oracle->num_outputs();
  config["seed"] = seed;
  config["rng"] = SeededRng::kVersion;
  config["threads"] = params.threads;
  return config;
}

int run_test_privacy(PrivacyArgs& a, bool generate, std::ostream& out,
                     std::ostream& err) {
  MechanismInput mech = resolve_mechanism(a.mech, a.dim);
  if (a.dist != "uniform") {
    const ProductDistribution probe = load_distribution(a.dist, 0);
    mech.dim = merge_dim(mech.dim, probe.dim(), "the distribution file");
    if (is_builtin(a.mech) && mech.oracle->dim() != mech.dim) {
      mech = resolve_mechanism(a.mech, mech.dim);
    }
  }
  const ProductDistribution dist = load_distribution(a.dist, mech.dim);

  GdpParams params;
  params.alpha = a.alpha;
  params.beta = a.beta;
  params.gamma = a.gamma;
  params.delta = a.delta;
  params.threads = a.common.threads;

  const std::uint64_t seed = resolve_seed(a.common);
  err << "auditing " << a.mech << " at d=" << mech.dim << " with |outputs|="
      << mech.oracle->num_outputs() << "\n";

  if (!generate) {
    const PrivacyVerdict verdict =
        gdp_test(*mech.oracle, dist, params, SeededRng(seed));
    Json j = report_frame("test-privacy");
    j["config"] = privacy_config_json(a, mech, dist, params, seed);
    j.update(privacy_verdict_to_json(verdict));
    j.erase("seed");
    emit(j, out);
    return verdict.verdict == Verdict::kYes ? 0 : 1;
  }

  const Vertex dataset = Vertex::from_bitstring(a.dataset);
  if (dataset.dim() != mech.dim) {
    throw std::invalid_argument("--dataset length disagrees with the dimension");
  }
  const PrivGenResult result =
      priv_gen(*mech.oracle, dataset, dist, params, SeededRng(seed));
  Json j = report_frame("privgen");
  Json config = privacy_config_json(a, mech, dist, params, seed);
  config["dataset"] = a.dataset;
  j["config"] = std::move(config);
  j["failure"] = result.failure;
  j["output"] = result.failure ? Json(nullptr) : Json(result.output_label);
  // The wrapper's end-to-end guarantee: ratio parameter alpha*(1+delta),
  // additive slack gamma, bad-set mass beta. It holds on both branches.
  Json guarantee;
  guarantee["alpha_effective"] =
      params.alpha * (1.0 + result.audit.resolved_delta);
  guarantee["gamma_slack"] = params.gamma;
  guarantee["beta_mass"] = params.beta;
  j["guarantee"] = std::move(guarantee);
  j["audit"] = privacy_verdict_to_json(result.audit);
  emit(j, out);
  return result.failure ? 1 : 0;
}

struct DistanceArgs {
  int dim = 0;
  std::string function;
  std::string dist = "uniform";
  double c = 1.0;
  CommonOptions common;
};

int run_oracle_distance(DistanceArgs& a, std::ostream& out, std::ostream& err) {
  FunctionInput fn = resolve_function(a.function, a.dim);
  if (a.dist != "uniform") {
    const ProductDistribution probe = load_distribution(a.dist, 0);
    fn.dim = merge_dim(fn.dim, probe.dim(), "the distribution file");
    if (is_builtin(a.function) && fn.oracle->dim() != fn.dim) {
      fn = resolve_function(a.function, fn.dim);
    }
  }
  if (fn.dim < 1) throw std::invalid_argument("cannot infer the dimension; pass --dim");
  const ProductDistribution dist = load_distribution(a.dist, fn.dim);

  // The search needs the full table; materialize builtins.
  DenseFunction table = [&] {
    if (const auto* dense = dynamic_cast<const DenseFunctionOracle*>(fn.oracle.get())) {
      return dense->table();
    }
    std::vector<double> values(std::size_t{1} << fn.dim);
    for (std::uint64_t b = 0; b < values.size(); ++b) {
      values[b] = fn.oracle->evaluate(Vertex(b, fn.dim));
    }
    return DenseFunction(fn.dim, std::move(values), fn.oracle->grid_delta());
  }();

  err << "computing the exact distance at d=" << fn.dim << "\n";
  const DistanceCertificate cert = exact_distance_to_lipschitz(table, dist, a.c);

  Json j = report_frame("oracle-distance");
  Json config;
  config["dim"] = fn.dim;
  config["function"] = a.function;
  config["distribution"] = distribution_json(dist, a.dist);
  config["c"] = a.c;
  j["config"] = std::move(config);
  j.update(certificate_to_json(cert));
  emit(j, out);
  return 0;
}

int run_verify(const std::string& which, std::uint64_t seed, double scale,
               std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.scale = scale;
  const std::vector<SuiteResult> results =
      which == "repair" ? run_repair_suites(opts) : run_all_suites(opts);

  bool all_passed = true;
  Json suites = Json::array();
  for (const SuiteResult& r : results) {
    err << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
        << " (" << r.seconds << " s)\n";
    Json s;
    s["name"] = r.name;
    s["passed"] = r.passed;
    s["checks"] = r.checks;
    s["failures"] = r.failures;
    s["detail"] = r.detail;
    suites.push_back(std::move(s));
    all_passed &= r.passed;
  }

  Json j = report_frame(which == "repair" ? "verify-repair" : "verify-all");
  Json config;
  config["seed"] = seed;
  config["scale"] = scale;
  config["rng"] = SeededRng::kVersion;
  j["config"] = std::move(config);
  j["suites"] = std::move(suites);
  j["all_passed"] = all_passed;
  emit(j, out);
  return all_passed ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Sublinear Lipschitz testing and differential-privacy auditing "
               "on the Boolean hypercube"};
  app.require_subcommand(1);

  LipschitzArgs lip;
  CLI::App* lip_cmd =
      app.add_subcommand("test-lipschitz", "test a function for Lipschitzness");
  lip_cmd->add_option("--dim", lip.dim, "hypercube dimension");
  lip_cmd->add_option("--function", lip.function,
                      "builtin:NAME[?k=v] or a function table file")
      ->required();
  lip_cmd->add_option("--dist", lip.dist, "'uniform' or a JSON array file");
  lip_cmd->add_option("--epsilon", lip.epsilon_prime, "proximity parameter")
      ->required();
  lip_cmd->add_option("--omega", lip.omega, "failure probability")->required();
  lip_cmd->add_option("--delta", lip.delta, "grid / approximation step")
      ->required();
  lip_cmd->add_option("--mode", lip.mode, "grid, real or auto");
  add_common(lip_cmd, lip.common);

  PrivacyArgs priv;
  CLI::App* priv_cmd =
      app.add_subcommand("test-privacy", "audit a mechanism's privacy");
  PrivacyArgs gen;
  CLI::App* gen_cmd = app.add_subcommand(
      "privgen", "audit, then release an output or FAILURE");
  for (auto [cmd, a] : {std::pair{priv_cmd, &priv}, std::pair{gen_cmd, &gen}}) {
    cmd->add_option("--mech", a->mech,
                    "builtin:NAME[?k=v] or a mechanism table file")
        ->required();
    cmd->add_option("--dim", a->dim, "dataset dimension");
    cmd->add_option("--dist", a->dist, "'uniform' or a JSON array file");
    cmd->add_option("--alpha", a->alpha, "privacy parameter")->required();
    cmd->add_option("--beta", a->beta, "bad-set mass budget")->required();
    cmd->add_option("--gamma", a->gamma, "audit failure budget")->required();
    cmd->add_option("--delta", [a](const std::vector<std::string>& vals) {
      try {
        std::size_t pos = 0;
        a->delta = std::stod(vals.at(0), &pos);
        return pos == vals.at(0).size();
      } catch (...) {
        return false;
      }
    }, "tester approximation step (default derived)");
    add_common(cmd, a->common);
  }
  gen_cmd->add_option("--dataset", gen.dataset, "dataset bitstring")->required();

  DistanceArgs dist_args;
  CLI::App* dist_cmd = app.add_subcommand(
      "oracle-distance", "exact distance to the Lipschitz property");
  dist_cmd->add_option("--function", dist_args.function,
                       "builtin:NAME[?k=v] or a function table file")
      ->required();
  dist_cmd->add_option("--dim", dist_args.dim, "hypercube dimension");
  dist_cmd->add_option("--dist", dist_args.dist, "'uniform' or a JSON array file");
  dist_cmd->add_option("--c", dist_args.c, "Lipschitz constant");
  add_common(dist_cmd, dist_args.common);

  CommonOptions verify_common;
  double verify_scale = 1.0;
  CLI::App* verify_repair_cmd =
      app.add_subcommand("verify-repair", "run the repair property suites");
  CLI::App* verify_all_cmd =
      app.add_subcommand("verify-all", "run every property suite");
  for (CLI::App* cmd : {verify_repair_cmd, verify_all_cmd}) {
    add_common(cmd, verify_common);
    cmd->add_option("--trials-scale", verify_scale,
                    "trial-count multiplier (1 = full sweep)")
        ->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (lip_cmd->parsed()) return run_test_lipschitz(lip, out, err);
    if (priv_cmd->parsed()) return run_test_privacy(priv, false, out, err);
    if (gen_cmd->parsed()) return run_test_privacy(gen, true, out, err);
    if (dist_cmd->parsed()) return run_oracle_distance(dist_args, out, err);
    if (verify_repair_cmd->parsed() || verify_all_cmd->parsed()) {
      if (!verify_common.seed_given) verify_common.seed = 20260811;
      return run_verify(verify_repair_cmd->parsed() ? "repair" : "all",
                        verify_common.seed, verify_scale, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace liptest
