// Copyright 2026 The entorder Authors
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

// entorder: construct the states, run the convertibility criteria and
// assemble the accessibility graph from the command line.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entorder/app.hpp"

namespace {

using entorder::app::CommandResult;
using entorder::app::RunConfig;

struct CommonFlags {
  std::vector<std::string> tolerances;
  std::string format;
};

void add_common(CLI::App* cmd, RunConfig& config, CommonFlags& flags) {
  cmd->add_option("--seed", config.seed, "Seed for randomized restarts")->capture_default_str();
  cmd->add_option("--restarts", config.restarts, "Number of seeded restarts")->capture_default_str()->check(
      CLI::PositiveNumber);
  cmd->add_option("--tol", flags.tolerances, "Tolerance override <name>=<value> (repeatable)");
  cmd->add_option("--format", flags.format, "Output format: json, dot or text");
  cmd->add_option("--out", config.output_path, "Write the output document to this path");
  cmd->add_flag("--verbose", config.verbose, "Include per-restart traces in JSON output");
}

int emit(const CommandResult& r, const RunConfig& config) {
  if (!r.output.empty()) {
    if (config.output_path.empty()) {
      std::cout << r.output;
    } else {
      std::ofstream out(config.output_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write '" << config.output_path << "'\n";
        return entorder::app::kExitInputInvalid;
      }
      out << r.output;
    }
  }
  if (!r.error.empty()) std::cerr << r.error << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement accessibility toolkit: LOCC criteria, entanglement bounds and order graphs"};
  app.require_subcommand(1);

  RunConfig config;
  CommonFlags flags;

  auto* reproduce = app.add_subcommand("reproduce-paper", "Rebuild the partial-order counterexample graph");
  add_common(reproduce, config, flags);
  reproduce->add_flag("--pure-example", config.pure_example, "Use the single-copy pure-state example instead");
  reproduce->add_option("--sigma-entropy", config.sigma_entropy, "Entropy of entanglement of sigma_AB (bits)")
      ->capture_default_str()
      ->check(CLI::Range(1e-12, 1.0));
  reproduce->add_option("--ec-cert", config.ec_certificate, "Certified lower bound on E_C(rho_AB) (bits)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  std::string check_name;
  std::vector<std::string> check_inputs;
  auto* check = app.add_subcommand("check", "Run one criterion or measure");
  add_common(check, config, flags);
  check->add_option("criterion", check_name,
                    "ppt | upb | schmidt | nielsen | entropy | negativity | eof | restored-e | distance")
      ->required()
      ->check(CLI::IsMember(
          {"ppt", "upb", "schmidt", "nielsen", "entropy", "negativity", "eof", "restored-e", "distance"}));
  check->add_option("inputs", check_inputs, "Built-in state names or state JSON files");
  check->add_option("--ensemble-size", config.ensemble_size, "Decomposition size for eof (default: sweep)")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--sigma-entropy", config.sigma_entropy, "Entropy of entanglement of sigma_AB (bits)")
      ->check(CLI::Range(1e-12, 1.0));

  std::vector<std::string> graph_inputs;
  std::string certificate_file;
  auto* graph = app.add_subcommand("graph", "Build the accessibility graph over a set of states");
  add_common(graph, config, flags);
  graph->add_option("states", graph_inputs, "Built-in state names or state JSON files")->required();
  graph->add_option("--certs", certificate_file, "Certificate JSON file")->check(CLI::ExistingFile);
  graph->add_flag("--asymptotic", config.asymptotic, "Decide pure pairs by entropy instead of majorization");
  graph->add_option("--sigma-entropy", config.sigma_entropy, "Entropy of entanglement of sigma_AB (bits)")
      ->check(CLI::Range(1e-12, 1.0));

  std::string state_ref;
  auto* state = app.add_subcommand("state", "Print a built-in state as JSON");
  add_common(state, config, flags);
  state->add_option("name", state_ref, "Built-in state name")->required();
  state->add_option("--sigma-entropy", config.sigma_entropy, "Entropy of entanglement of sigma_AB (bits)")
      ->check(CLI::Range(1e-12, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return entorder::app::kExitInputInvalid;
  }

  try {
    for (const auto& t : flags.tolerances) entorder::app::apply_tolerance_override(config, t);
    if (!flags.format.empty()) config.format = entorder::app::parse_format(flags.format);
  } catch (const std::exception& e) {
    std::cerr << "input invalid: " << e.what() << "\n";
    return entorder::app::kExitInputInvalid;
  }

  if (*reproduce) return emit(entorder::app::cmd_reproduce_paper(config), config);
  if (*check) return emit(entorder::app::cmd_check(check_name, check_inputs, config), config);
  if (*graph) return emit(entorder::app::cmd_graph(graph_inputs, certificate_file, config), config);
  return emit(entorder::app::cmd_state(state_ref, config), config);
}
