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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entorder/criteria.hpp"
#include "entorder/measures.hpp"
#include "entorder/order.hpp"
#include "entorder/states.hpp"

namespace entorder::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputInvalid = 2;
inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Json, Dot, Text };

OutputFormat parse_format(const std::string& s);

struct RunConfig {
  std::uint64_t seed = 0;
  int restarts = 200;
  std::map<std::string, double> tolerances;
  std::string output_path;
  std::optional<OutputFormat> format;  // unset: command default
  bool verbose = false;
  bool pure_example = false;
  bool asymptotic = false;
  double sigma_entropy = 0.005;   // bits; target E of sigma_AB
  double ec_certificate = 0.01;   // certified lower bound on E_C(rho_AB)
  int ensemble_size = 0;          // 0: sweep {rank, 2 rank}
};

/// Names accepted by --tol.
std::vector<std::string> tolerance_names();

/// Parses "<name>=<value>" into config.tolerances. Throws ValidationError for
/// unknown names or non-positive values.
void apply_tolerance_override(RunConfig& config, const std::string& assignment);

EngineOptions engine_options(const RunConfig& config);
SeesawOptions seesaw_options(const RunConfig& config);
EofOptions eof_options(const RunConfig& config);

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // primary document (stdout or --out)
  std::string error;   // diagnostics for stderr
};

/// A built-in state name ("Phi3", "phi1", "phi2", "rho_AB", "sigma_AB",
/// "classical-corr", "Bell") or the path of a state JSON file.
State load_state(const std::string& ref, const RunConfig& config);

/// The pure state sigma_AB = cos t|00> + sin t|11> on 3x3 with the configured
/// entropy of entanglement.
PureState counterexample_sigma(const RunConfig& config);

/// States and certificates of the mixed-state counterexample.
StateRegistry counterexample_registry(const RunConfig& config);
std::vector<Certificate> counterexample_certificates(const RunConfig& config);

CommandResult cmd_reproduce_paper(const RunConfig& config);
CommandResult cmd_check(const std::string& subcommand, const std::vector<std::string>& inputs,
                        const RunConfig& config);
CommandResult cmd_graph(const std::vector<std::string>& inputs, const std::string& certificate_file,
                        const RunConfig& config);
CommandResult cmd_state(const std::string& ref, const RunConfig& config);

}  // namespace entorder::app
