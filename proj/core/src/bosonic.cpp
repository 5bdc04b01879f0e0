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

#include "qtedge/bosonic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qtedge/errors.hpp"

namespace qtedge::bosonic {
namespace {

double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

void check_modes(double omega0, double omega1, double lambda0, double lambda1, double t,
                 const char* model) {
  if (!(omega0 > 0.0) || !(omega1 > 0.0)) {
    throw DomainError(std::string(model) + ": frequencies must be > 0");
  }
  if (!std::isfinite(lambda0) || !std::isfinite(lambda1)) {
    throw DomainError(std::string(model) + ": couplings must be finite");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(model) + ": t must be finite and >= 0");
  }
}

double nu_from(double x) {
  // nu = sqrt((x^{-1/2} - 1) / 2) with x = 1 - g0^2 or 1 - g1^-2.
  return std::sqrt(0.5 * (1.0 / std::sqrt(x) - 1.0));
}

}  // namespace

void OpoParams::validate() const {
  check_modes(omega0, omega1, lambda0, lambda1, t, "OPO");
  if (!(g0() < 1.0)) {
    throw DomainError("OPO: H_0 must be below threshold (g0 < 1), got g0 = " +
                      std::to_string(g0()));
  }
}

void OpoParams::validate_unstable() const {
  validate();
  if (!(g1() > 1.0)) {
    throw DomainError("OPO: H_1 must be above threshold (g1 > 1), got g1 = " +
                      std::to_string(g1()));
  }
}

OpoParams OpoParams::from_criticality(double g0, double g1, double t, double omega) {
  return {omega, omega, 0.5 * g0 * omega, 0.5 * g1 * omega, t};
}

BogoliubovCoefficients bogoliubov(double g0, double g1, double omega0, double lambda1) {
  if (!(g0 >= 0.0 && g0 < 1.0)) {
    throw DomainError("bogoliubov: requires 0 <= g0 < 1, got " + std::to_string(g0));
  }
  if (!(g1 > 1.0) || !std::isfinite(g1)) {
    throw DomainError("bogoliubov: requires g1 > 1, got " + std::to_string(g1));
  }
  BogoliubovCoefficients c;
  const double x0 = 1.0 - g0 * g0;
  const double x1 = 1.0 - 1.0 / (g1 * g1);
  c.nu0 = nu_from(x0);
  c.mu0 = std::sqrt(1.0 + c.nu0 * c.nu0);
  c.nu1 = nu_from(x1);
  c.mu1 = std::sqrt(1.0 + c.nu1 * c.nu1);
  c.mu_prime = c.mu1 * c.mu0 - c.nu1 * c.nu0;
  c.nu_prime = c.nu1 * c.mu0 - c.mu1 * c.nu0;
  c.omega_prime = omega0 * std::sqrt(x0);
  c.lambda_prime = lambda1 * std::sqrt(x1);
  return c;
}

Fidelity opo_fidelity_exact(const OpoParams& params) {
  params.validate_unstable();
  const auto c = bogoliubov(params.g0(), params.g1(), params.omega0, params.lambda1);
  const double squeeze = 1.0 + 2.0 * c.nu_prime * c.nu_prime;
  const double growth = std::sinh(2.0 * std::abs(c.lambda_prime) * params.t);
  const double x = squeeze * growth;
  return Fidelity(1.0 / std::sqrt(1.0 + x * x));
}

Fidelity opo_fidelity_engine(const OpoParams& params) {
  params.validate();
  const auto initial = gaussian::ground_state(build_opo_hamiltonian(params.omega0, params.lambda0));
  const auto h1 = build_opo_hamiltonian(params.omega1, params.lambda1);
  return gaussian::pure_overlap(initial, gaussian::evolve(initial, h1, params.t));
}

Fidelity opo_fidelity_worst_case(double lambda1, double delta, double t) {
  if (!(delta > 0.0)) throw DomainError("worst-case fidelity requires delta > 0");
  if (!(t >= 0.0)) throw DomainError("t must be >= 0");
  const double x = 2.0 * lambda1 * std::sqrt(delta) * t;
  return Fidelity(std::exp(-log_cosh(x)));
}

double opo_detectable_perturbation(Fidelity target, double lambda1, double t) {
  if (!(target.value() > 0.0 && target.value() < 1.0)) {
    throw DomainError("target fidelity must lie in (0, 1)");
  }
  if (!(lambda1 > 0.0) || !(t > 0.0)) throw DomainError("lambda1 and t must be > 0");
  const double l = -std::log(target.value() / 2.0);
  return l * l / (4.0 * lambda1 * lambda1 * t * t);
}

MultimodeResult opo_multimode(std::int64_t n_modes, double lambda1, double delta,
                              double t, Fidelity target) {
  if (n_modes < 1) throw DomainError("multimode: n_modes must be >= 1");
  if (!(delta > 0.0)) throw DomainError("multimode: delta must be > 0");
  if (!(lambda1 > 0.0) || !(t > 0.0)) throw DomainError("multimode: lambda1 and t must be > 0");
  if (!(target.value() > 0.0 && target.value() < 1.0)) {
    throw DomainError("target fidelity must lie in (0, 1)");
  }
  const double n = static_cast<double>(n_modes);
  const double per_mode = 2.0 * lambda1 * lambda1 * delta * t * t;

  MultimodeResult r;
  r.log_decay = n * per_mode;
  r.fidelity = std::exp(-r.log_decay);
  r.detectable_perturbation = target.log_decay() / (2.0 * n * lambda1 * lambda1 * t * t);
  r.product_log_decay = n * log_cosh(2.0 * lambda1 * std::sqrt(delta) * t);
  r.product_fidelity = std::exp(-r.product_log_decay);
  r.outside_validity_window = per_mode > kMultimodeValidityWindow;
  return r;
}

ReceiverResult kennedy_receiver(const OpoParams& params, const BinaryHypothesis& prior) {
  const Fidelity f = opo_fidelity_exact(params);
  ReceiverResult r;
  r.p10 = 0.0;
  r.p01 = f.value();
  r.error_probability = r.p01 * prior.p1();
  r.error_exponent = -std::log(prior.p1()) + f.log_decay();
  return r;
}

gaussian::QuadraticHamiltonian build_opo_hamiltonian(double omega, double lambda) {
  if (!(omega > 0.0)) throw DomainError("OPO Hamiltonian requires omega > 0");
  Eigen::Matrix2d m;
  m << omega, 2.0 * lambda, 2.0 * lambda, omega;
  return gaussian::QuadraticHamiltonian(m, -0.5 * omega);
}

gaussian::QuadraticHamiltonian build_dicke_hamiltonian(double omega, double lambda) {
  if (!(omega > 0.0)) throw DomainError("Dicke Hamiltonian requires omega > 0");
  Eigen::Matrix4d m = omega * Eigen::Matrix4d::Identity();
  // lambda (a^dag + a)(b^dag + b) = 2 lambda q_a q_b
  m(0, 2) = 2.0 * lambda;
  m(2, 0) = 2.0 * lambda;
  return gaussian::QuadraticHamiltonian(m, -omega);
}

void DickeParams::validate() const {
  check_modes(omega0, omega1, lambda0, lambda1, t, "Dicke");
  if (!(std::abs(g0()) < 1.0)) {
    throw DomainError("Dicke: H_0 must be in the normal phase (|g0| < 1), got g0 = " +
                      std::to_string(g0()));
  }
}

DickeParams DickeParams::from_criticality(double g0, double g1, double t, double omega) {
  return {omega, omega, 0.5 * g0 * omega, 0.5 * g1 * omega, t};
}

DickeFidelity dicke_fidelity(const DickeParams& params) {
  params.validate();
  const auto initial =
      gaussian::ground_state(build_dicke_hamiltonian(params.omega0, params.lambda0));
  const auto h1 = build_dicke_hamiltonian(params.omega1, params.lambda1);

  DickeFidelity out;
  out.fidelity = gaussian::pure_overlap(initial, gaussian::evolve(initial, h1, params.t)).value();
  const double delta = params.delta();
  const double envelope_rate = params.omega1 * std::sqrt(std::max(delta, 0.0));
  out.plus_factor = out.fidelity * std::cosh(envelope_rate * params.t);
  out.unstable_rate = gaussian::max_growth_rate(h1);
  return out;
}

}  // namespace qtedge::bosonic
