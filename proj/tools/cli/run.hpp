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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "emit.hpp"

namespace qtedge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitNonConvergence = 3,
  kExitIo = 4,
};

using Row = std::vector<std::pair<std::string, double>>;

/// One evaluation of a scalar command at fully resolved parameters.
/// Throws DomainError / ConvergenceError.
Row evaluate(Model model, const std::string& command, const Params& params, bool oracle_check);

/// Table for a (possibly swept) run. Failed sweep points carry NaN values and
/// a non-"ok" status; `warnings` counts them.
Table build_table(const RunConfig& config, std::ostream& err, int& warnings);

/// Executes the configuration: prints results to `out`, diagnostics to `err`,
/// writes the requested CSV/SVG files. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qtedge::cli
