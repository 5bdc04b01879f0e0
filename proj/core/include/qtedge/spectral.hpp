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

// Heterodyne output spectrum of a damped degenerate OPO and the classical
// Fisher information it carries about the resonance frequency omega_m.
//
// Normalized variables: Omega = omega / 2|lambda|, g = 2|lambda| / omega_m,
// Gamma = gamma / 2|lambda|. Threshold sits at g = (1 - Gamma^2/4)^{-1/2}.
// "Normalized" Fisher information means G gamma^3 / (omega_m^2 t).

#include <string>
#include <vector>

namespace qtedge::spectral {

struct SpectralParams {
  double omega_m = 1.0;  ///< resonance frequency
  double lam = 0.5;      ///< pump coefficient lambda (magnitude used)
  double gamma = 0.01;   ///< coupling rate
  double s_in = 0.5;     ///< input noise power
  double s_prime = 0.5;  ///< excess noise power
  double t = 1.0;        ///< observation time

  double g() const;
  double gamma_norm() const;
  bool quantum_limited() const;
  /// Requires gamma > 0, lam != 0, t > 0, omega_m > 0, non-negative noise.
  void validate() const;

  /// Physical parameters realizing (g, Gamma) at the given |lambda| and t.
  static SpectralParams from_normalized(double g, double gamma_norm, double lam = 0.5,
                                        double t = 1.0);
};

/// (1 - Gamma^2/4)^{-1/2}; +inf for Gamma >= 2.
double threshold_g(double gamma_norm);

enum class Regime { kBelowThreshold, kAtThreshold, kAboveThreshold };

/// kAtThreshold when |g - g_th| <= 1e-12 g_th.
Regime classify(double g, double gamma_norm);

/// Idler gain V(Omega). Returns +inf (the divergence marker) where the
/// denominator is not positive.
double idler_gain(double omega, double g, double gamma_norm);

/// dV/dg in closed form (chain rule through u = g^-2 - 1).
double idler_gain_dg(double omega, double g, double gamma_norm);

/// S = (1 + 2V) S_in + S'. Requires g at or below threshold.
double output_spectrum(double omega, const SpectralParams& params);

struct NoisePowers {
  double s_in = 0.5;
  double s_prime = 0.5;
};

/// B(g, g') = 2|lambda| t Int dOmega/2pi ln[(S + S') / (2 sqrt(S S'))].
/// Both g and g' must be below threshold.
double bhattacharyya_distance(double g, double g_prime, double gamma_norm, double lam,
                              double t, NoisePowers noise = {});

/// Normalized Fisher information from the squared-derivative integral
/// g^6 Gamma^3 Int dOmega/2pi (2 S_in dV/dg / S)^2 (reduces to
/// (dV/dg)^2/(V+1)^2 for quantum-limited noise). Below threshold only; at
/// threshold the dedicated formula is used.
double normalized_fisher(double g, double gamma_norm, NoisePowers noise = {});

/// Quantum-limited normalized Fisher information from the equivalent form
/// (16/Gamma) Int dOmega/2pi [Omega^2 - (g^-2 - 1 + Gamma^2/4)]^2 V^4/(V+1)^2.
double normalized_fisher_gain_form(double g, double gamma_norm);

/// 16 Int dx/2pi (x^2+1)^-2 [1 + Gamma^2 x^2 (x^2+1)]^-2: the exact-threshold
/// value; lies strictly between 1.532 and 4 for 0 < Gamma < 2.
double normalized_fisher_threshold(double gamma_norm);

/// Fisher information G(omega_m) in physical units.
double fisher_information(const SpectralParams& params);
double fisher_information_gain_form(const SpectralParams& params);
double fisher_threshold(const SpectralParams& params);

/// G from the identity G = 4 (dg/domega_m)^2 d^2B/dg'^2 at g' = g, using a
/// Richardson-extrapolated central second difference with step rel_step * g.
double fisher_from_bhattacharyya(const SpectralParams& params, double rel_step = 1e-3);

struct SweepPoint {
  double g = 0.0;
  double normalized_fisher = 0.0;
  bool ok = true;
  std::string error;  ///< set when !ok
};

/// Normalized Fisher information over a grid of g at fixed Gamma. Failed
/// points are flagged and the sweep continues. Points are evaluated on
/// `threads` workers; output order follows the grid.
std::vector<SweepPoint> fisher_sweep(double gamma_norm, const std::vector<double>& g_grid,
                                     NoisePowers noise = {}, unsigned threads = 1);

/// n log-spaced points from lo to hi inclusive (n == 1 gives {lo}).
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace qtedge::spectral
