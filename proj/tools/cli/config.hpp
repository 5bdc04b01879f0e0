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

#pragma once

// Run configuration for the qtedge command-line tool: parameter schemas per
// command, the flat sectioned config-file format and sweep specifications.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtedge::cli {

/// Raised on file-system failures; maps to exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Model { kHelstrom, kStandard, kIsing, kOpo, kDicke, kFisher, kOracle };

const char* model_name(Model model);
Model parse_model(const std::string& name);

enum class Scale { kLinear, kLog };

struct SweepSpec {
  std::string variable;
  double start = 0.0;
  double stop = 1.0;
  int points = 1;
  Scale scale = Scale::kLinear;

  /// start < stop (unless points == 1), points >= 1, log needs start > 0.
  void validate() const;
  std::vector<double> values() const;
};

/// One schema entry. Choice parameters store the index of the chosen label.
struct ParamSpec {
  std::string name;
  double default_value = 0.0;
  std::string help;
  bool integer = false;
  std::vector<std::string> choices;
};

using Params = std::map<std::string, double>;

struct RunConfig {
  Model model = Model::kHelstrom;
  std::string command;  ///< subcommand within the model, e.g. "exact"
  Params parameters;
  std::optional<SweepSpec> sweep;
  std::string csv_path;
  std::string svg_path;
  bool log_x = false;
  bool log_y = false;
  bool oracle_check = false;
  unsigned threads = 1;
  /// Absolute tolerance used to flag analytic/oracle disagreement.
  double oracle_tolerance = 1e-6;
};

/// Parameter schema of a (model, command) pair. Throws DomainError for an
/// unknown command.
const std::vector<ParamSpec>& schema(Model model, const std::string& command);

/// Parses a decimal literal (or, for choice parameters, one of the labels)
/// against `spec`. Throws DomainError on malformed input.
double parse_value(const ParamSpec& spec, const std::string& text);

/// Reads `[section]` / `key = value` text and returns the keys of the
/// section named after `model` that belong to `command`. Other model sections
/// are skipped. Unknown sections, and keys no command of the model accepts,
/// are rejected. `#` and `;` start comments.
std::map<std::string, std::string> parse_config_text(const std::string& text, Model model,
                                                     const std::string& command);
std::map<std::string, std::string> read_config_file(const std::string& path, Model model,
                                                    const std::string& command);

/// Schema defaults, overridden by file values, overridden by flag values.
Params resolve_parameters(const std::vector<ParamSpec>& params,
                          const std::map<std::string, std::string>& file_values,
                          const std::map<std::string, std::string>& flag_values);

}  // namespace qtedge::cli
