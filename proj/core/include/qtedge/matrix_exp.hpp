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

#include <Eigen/Dense>

namespace qtedge::linalg {

/// Diagnostics from one matrix exponential evaluation.
struct ExpmInfo {
  int pade_degree = 0;
  int squarings = 0;
  double rcond = 1.0;  ///< reciprocal condition estimate of the Pade denominator
};

/// exp(A) for a small dense real matrix by scaling and squaring with
/// degree 3..13 Pade approximants (Higham 2005 degree/threshold table).
/// Intended for non-normal generators where an eigendecomposition is
/// ill-conditioned.
///
/// Throws ConvergenceError when the Pade denominator is numerically singular
/// or the result is not finite; `achieved()` reports the rcond estimate.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a, ExpmInfo* info = nullptr);

}  // namespace qtedge::linalg
