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

// Degenerate OPO and normal-phase Dicke detectors: closed-form fidelities,
// Bogoliubov coefficients, the photon-counting receiver and multimode scaling.

#include <cstdint>

#include "qtedge/detection.hpp"
#include "qtedge/gaussian.hpp"

namespace qtedge::bosonic {

/// H_m = omega_m a^dag a + i lambda_m (a^dag^2 - a^2), real lambda_m.
/// Criticality g_m = 2 lambda_m / omega_m; H_0 below threshold (g0 < 1).
struct OpoParams {
  double omega0 = 1.0;
  double omega1 = 1.0;
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double t = 0.0;

  double g0() const noexcept { return 2.0 * lambda0 / omega0; }
  double g1() const noexcept { return 2.0 * lambda1 / omega1; }

  /// Requires omega_m > 0, finite lambda_m, t >= 0 and g0 < 1.
  void validate() const;
  /// validate() plus g1 > 1 (unstable perturbed Hamiltonian).
  void validate_unstable() const;

  /// Equal detunings omega; lambda_m = g_m omega / 2.
  static OpoParams from_criticality(double g0, double g1, double t, double omega = 1.0);
};

struct BogoliubovCoefficients {
  double nu0 = 0.0, mu0 = 1.0;  ///< b0 = mu0 a + i nu0 a^dag
  double nu1 = 0.0, mu1 = 1.0;  ///< b1 = mu1 a + i nu1 a^dag
  double mu_prime = 1.0;        ///< b1 = mu' b0 + i nu' b0^dag
  double nu_prime = 0.0;
  double omega_prime = 0.0;     ///< omega0 sqrt(1 - g0^2)
  double lambda_prime = 0.0;    ///< lambda1 sqrt(1 - g1^-2)
};

/// Requires 0 <= g0 < 1 < g1. omega_prime and lambda_prime are scaled by the
/// supplied omega0 and lambda1 (unit defaults give the dimensionless factors).
BogoliubovCoefficients bogoliubov(double g0, double g1, double omega0 = 1.0,
                                  double lambda1 = 1.0);

/// [1 + (1 + 2 nu'^2)^2 sinh^2(2 lambda' t)]^{-1/2}.
Fidelity opo_fidelity_exact(const OpoParams& params);

/// Same quantity from the Gaussian engine: ground state of H_0, evolved under
/// H_1, overlapped with the initial state.
Fidelity opo_fidelity_engine(const OpoParams& params);

/// sech(2 lambda1 sqrt(delta) t), the nu' = 0 limit near threshold.
Fidelity opo_fidelity_worst_case(double lambda1, double delta, double t);

/// [-ln(F'/2)]^2 / (4 lambda1^2 t^2).
double opo_detectable_perturbation(Fidelity target, double lambda1, double t);

inline constexpr double kMultimodeValidityWindow = 0.05;

struct MultimodeResult {
  double fidelity = 1.0;                 ///< exp(-2 N lambda1^2 delta t^2)
  double log_decay = 0.0;                ///< 2 N lambda1^2 delta t^2
  double detectable_perturbation = 0.0;  ///< -ln F' / (2 N lambda1^2 t^2)
  double product_fidelity = 1.0;         ///< sech(2 lambda1 sqrt(delta) t)^N
  double product_log_decay = 0.0;
  /// Per-mode decay 2 lambda1^2 delta t^2 exceeded kMultimodeValidityWindow.
  bool outside_validity_window = false;
};

MultimodeResult opo_multimode(std::int64_t n_modes, double lambda1, double delta,
                              double t, Fidelity target);

/// Photon counting in the b0 mode, deciding H_1 on any nonzero count.
struct ReceiverResult {
  double p10 = 0.0;  ///< false alarm, identically zero
  double p01 = 0.0;  ///< miss, equal to the fidelity
  double error_probability = 0.0;
  double error_exponent = 0.0;  ///< -ln p1 - ln F
};

ReceiverResult kennedy_receiver(const OpoParams& params, const BinaryHypothesis& prior);

/// Quadrature form of the OPO Hamiltonian:
/// M = [[omega, 2 lambda], [2 lambda, omega]], offset -omega/2.
gaussian::QuadraticHamiltonian build_opo_hamiltonian(double omega, double lambda);

/// omega (a^dag a + b^dag b) + lambda (a^dag + a)(b^dag + b), modes (a, b).
/// Normal-mode frequencies satisfy eps_-+^2 = omega^2 (1 -+ g).
gaussian::QuadraticHamiltonian build_dicke_hamiltonian(double omega, double lambda);

struct DickeParams {
  double omega0 = 1.0;
  double omega1 = 1.0;
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double t = 0.0;

  double g0() const noexcept { return 2.0 * lambda0 / omega0; }
  double g1() const noexcept { return 2.0 * lambda1 / omega1; }
  double delta() const noexcept { return g1() - g0(); }

  /// Requires omega_m > 0, finite lambda_m, t >= 0 and g0 < 1.
  void validate() const;

  static DickeParams from_criticality(double g0, double g1, double t, double omega = 1.0);
};

struct DickeFidelity {
  double fidelity = 1.0;
  /// F cosh(omega1 sqrt(delta) t), delta = g1 - g0.
  double plus_factor = 1.0;
  /// Exponential growth rate of the unstable normal mode of H_1 as found by
  /// the engine (0 when H_1 is stable).
  double unstable_rate = 0.0;
};

DickeFidelity dicke_fidelity(const DickeParams& params);

}  // namespace qtedge::bosonic
