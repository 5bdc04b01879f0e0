// Copyright 2026 The qtedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qtedge: detection-theoretic figures of merit for transition-edge quantum
// detectors.

#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "config.hpp"
#include "qtedge/errors.hpp"
#include "run.hpp"

namespace {

using qtedge::cli::Model;

constexpr const char* kUnits =
    "Natural units throughout: hbar = 1, frequencies, couplings and rates in inverse time, "
    "times in the reciprocal unit. Criticality parameters g are dimensionless.";

struct Leaf {
  Model model;
  std::string command;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> flags;
};

struct Common {
  std::string config_path;
  std::string csv;
  std::string svg;
  bool oracle_check = false;
  bool log_x = false;
  bool log_y = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  double oracle_tolerance = 1e-6;
  std::string sweep_var;
  double sweep_from = 0.0;
  double sweep_to = 1.0;
  int sweep_points = 11;
  std::string sweep_scale = "linear";
};

void add_leaf(CLI::App* parent, const std::string& name, const std::string& help, Model model,
              const std::string& command, std::vector<Leaf>& leaves, Common& common) {
  CLI::App* sub = parent->add_subcommand(name, help);
  leaves.push_back({model, command, sub, {}});
  // Leaves are stable once all are registered; look up by index in the callback.
  const std::size_t index = leaves.size() - 1;
  for (const auto& spec : qtedge::cli::schema(model, command)) {
    std::string desc = spec.help;
    if (!spec.choices.empty()) {
      desc += " {";
      for (std::size_t i = 0; i < spec.choices.size(); ++i) {
        desc += (i ? "," : "") + spec.choices[i];
      }
      desc += "} (default " + spec.choices.front() + ")";
    } else {
      desc += " (default " + CLI::detail::to_string(spec.default_value) + ")";
    }
    const std::string key = spec.name;
    sub->add_option_function<std::string>(
        "--" + key, [&leaves, index, key](const std::string& v) { leaves[index].flags[key] = v; },
        desc);
  }
  sub->add_option("--config", common.config_path, "flat [model] key = value file; flags override it");
  sub->add_option("--csv", common.csv, "write the result table as CSV");
  sub->add_option("--svg", common.svg, "write a line chart of the first two columns");
  sub->add_flag("--log-x", common.log_x, "logarithmic x axis in the SVG");
  sub->add_flag("--log-y", common.log_y, "logarithmic y axis in the SVG");
  sub->add_flag("--oracle-check", common.oracle_check,
                "pair each analytic value with its brute-force oracle");
  sub->add_option("--oracle-tol", common.oracle_tolerance,
                  "absolute tolerance for flagging oracle disagreement");
  sub->add_option("--threads", common.threads, "worker threads for sweeps")
      ->check(CLI::PositiveNumber);
  if (!(model == Model::kFisher && command == "sweep") && model != Model::kOracle) {
    sub->add_option("--sweep", common.sweep_var, "parameter to sweep");
    sub->add_option("--sweep-from", common.sweep_from, "first sweep value");
    sub->add_option("--sweep-to", common.sweep_to, "last sweep value");
    sub->add_option("--sweep-points", common.sweep_points, "number of sweep values");
    sub->add_option("--sweep-scale", common.sweep_scale, "linear or log")
        ->check(CLI::IsMember({"linear", "log"}));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("qtedge: fidelity decay, error probabilities and Fisher "
                           "information of transition-edge detectors.\n") + kUnits};
  app.require_subcommand(1);
  std::vector<Leaf> leaves;
  leaves.reserve(32);
  Common common;

  add_leaf(&app, "helstrom", "minimum error probability for two pure states",
           Model::kHelstrom, "", leaves, common);

  auto* standard = app.add_subcommand("standard", "N independent copies (standard scaling)");
  standard->require_subcommand(1);
  add_leaf(standard, "qfi", "finite-difference quantum Fisher information", Model::kStandard,
           "qfi", leaves, common);
  add_leaf(standard, "detectable", "detectable perturbation at a target fidelity",
           Model::kStandard, "detectable", leaves, common);

  auto* ising = app.add_subcommand("ising", "periodic transverse-field Ising chain");
  ising->require_subcommand(1);
  add_leaf(ising, "exact", "Bloch-mode product fidelity", Model::kIsing, "exact", leaves, common);
  add_leaf(ising, "asymptotic", "thermodynamic-limit log-fidelity", Model::kIsing, "asymptotic",
           leaves, common);
  add_leaf(ising, "time-for-f", "time to reach a target fidelity", Model::kIsing, "time-for-f",
           leaves, common);

  auto* opo = app.add_subcommand("opo", "degenerate parametric oscillator (Hamiltonian model)");
  opo->require_subcommand(1);
  add_leaf(opo, "fidelity", "closed-form and Gaussian-engine fidelity", Model::kOpo, "fidelity",
           leaves, common);
  add_leaf(opo, "worst-case", "sech form at threshold", Model::kOpo, "worst-case", leaves, common);
  add_leaf(opo, "multimode", "N-mode scaling and detectable perturbation", Model::kOpo,
           "multimode", leaves, common);
  add_leaf(opo, "receiver", "photon-counting receiver in the b0 mode", Model::kOpo, "receiver",
           leaves, common);

  auto* dicke = app.add_subcommand("dicke", "two-mode Dicke model in the normal phase");
  dicke->require_subcommand(1);
  add_leaf(dicke, "fidelity", "Gaussian-engine fidelity", Model::kDicke, "fidelity", leaves,
           common);

  auto* fisher = app.add_subcommand("fisher", "Fisher information of the damped OPO spectrum");
  fisher->require_subcommand(1);
  add_leaf(fisher, "threshold", "normalized Fisher information at threshold", Model::kFisher,
           "threshold", leaves, common);
  add_leaf(fisher, "sweep", "normalized Fisher information versus g", Model::kFisher, "sweep",
           leaves, common);
  add_leaf(fisher, "point", "normalized Fisher information at one g", Model::kFisher, "point",
           leaves, common);

  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->require_subcommand(1);
  add_leaf(oracle, "compare", "analytic versus oracle at reference points", Model::kOracle,
           "compare", leaves, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qtedge::cli::kExitInvalidInput;
  }

  const Leaf* chosen = nullptr;
  for (const auto& leaf : leaves) {
    if (leaf.app->parsed()) chosen = &leaf;
  }
  if (!chosen) {
    std::cerr << "error: no command selected\n";
    return qtedge::cli::kExitInvalidInput;
  }

  qtedge::cli::RunConfig config;
  config.model = chosen->model;
  config.command = chosen->command;
  config.csv_path = common.csv;
  config.svg_path = common.svg;
  config.log_x = common.log_x;
  config.log_y = common.log_y;
  config.oracle_check = common.oracle_check;
  config.threads = common.threads;
  config.oracle_tolerance = common.oracle_tolerance;
  try {
    std::map<std::string, std::string> file_values;
    if (!common.config_path.empty()) {
      file_values =
          qtedge::cli::read_config_file(common.config_path, config.model, config.command);
    }
    config.parameters = qtedge::cli::resolve_parameters(
        qtedge::cli::schema(config.model, config.command), file_values, chosen->flags);
    if (!common.sweep_var.empty()) {
      qtedge::cli::SweepSpec spec;
      spec.variable = common.sweep_var;
      spec.start = common.sweep_from;
      spec.stop = common.sweep_to;
      spec.points = common.sweep_points;
      spec.scale = common.sweep_scale == "log" ? qtedge::cli::Scale::kLog
                                               : qtedge::cli::Scale::kLinear;
      spec.validate();
      config.sweep = spec;
    }
  } catch (const qtedge::cli::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qtedge::cli::kExitIo;
  } catch (const qtedge::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qtedge::cli::kExitInvalidInput;
  }
  return qtedge::cli::run(config, std::cout, std::cerr);
}
