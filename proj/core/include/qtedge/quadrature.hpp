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

#include <functional>
#include <vector>

namespace qtedge::quadrature {

struct Options {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  int max_intervals = 50000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;  ///< summed Gauss-Kronrod error estimate
  int evaluations = 0;
  int intervals = 0;
};

/// Global adaptive 7/15-point Gauss-Kronrod integration over
/// [breakpoints.front(), breakpoints.back()]. Every interior breakpoint is
/// kept as a subinterval edge, so sharp features should be listed there.
///
/// Throws ConvergenceError (achieved() = final error estimate) if the
/// tolerance max(abs_tol, rel_tol |I|) is not met within max_intervals or
/// subdivision runs into roundoff. Pieces whose estimate sits at the rounding
/// floor of the rule (50 eps Int|f|) are not split; a total made only of such
/// floors is accepted even above abs_tol.
Result integrate(const std::function<double(double)>& f, std::vector<double> breakpoints,
                 const Options& options = {});

/// Integral over [0, inf) through x = tan(u), u in [0, pi/2). `breakpoints`
/// are interior points in x (non-positive and non-finite entries ignored).
Result integrate_half_line(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints,
                           const Options& options = {});

}  // namespace qtedge::quadrature
