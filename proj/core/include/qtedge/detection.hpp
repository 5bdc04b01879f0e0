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

// Binary quantum detection theory for pure-state hypotheses: Helstrom bound,
// error exponents, standard-scaling baselines and finite-difference quantum
// Fisher information.

#include <cstdint>
#include <functional>
#include <limits>

#include <Eigen/Dense>

namespace qtedge {

/// Squared overlap |<psi0|psi1>|^2 of two pure states, in [0, 1].
///
/// Values within 1e-12 outside the unit interval are clamped; anything further
/// out throws DomainError.
class Fidelity {
 public:
  explicit Fidelity(double value);

  double value() const noexcept { return value_; }
  /// -ln F; +inf for F = 0.
  double log_decay() const;

  friend bool operator==(Fidelity, Fidelity) = default;

 private:
  double value_;
};

/// Prior probabilities of the two hypotheses H0 (unperturbed) and H1.
class BinaryHypothesis {
 public:
  /// Requires p0, p1 >= 0 and |p0 + p1 - 1| <= 1e-12.
  BinaryHypothesis(double p0, double p1);
  static BinaryHypothesis from_p0(double p0) { return {p0, 1.0 - p0}; }
  static BinaryHypothesis equal() { return {0.5, 0.5}; }

  double p0() const noexcept { return p0_; }
  double p1() const noexcept { return p1_; }

 private:
  double p0_;
  double p1_;
};

/// N probe copies, each a Gaussian wavepacket in the eigenbasis of the
/// generator q with variance var_q, exposed to H = q (x0 + delta) for time t.
struct StandardModelParams {
  std::int64_t n_copies = 1;
  double var_q = 1.0;
  double delta = 0.0;
  double t = 0.0;

  void validate() const;
};

/// Minimum average error probability over all POVMs:
/// (1 - sqrt(1 - 4 p0 p1 F)) / 2.
double helstrom_min_error(Fidelity fidelity, const BinaryHypothesis& prior);

/// -ln of the Helstrom error. `perfect_detection` is set (and `value` is +inf)
/// when the states are orthogonal.
struct ErrorExponent {
  double value = 0.0;
  bool perfect_detection = false;
};

ErrorExponent optimal_error_exponent(Fidelity fidelity,
                                     const BinaryHypothesis& prior);

/// Low-error approximation -ln p0 - ln p1 - ln F of the optimal exponent.
double asymptotic_error_exponent(Fidelity fidelity,
                                 const BinaryHypothesis& prior);

/// exp(-N var_q delta^2 t^2).
Fidelity standard_fidelity(const StandardModelParams& params);

/// Perturbation that brings the standard model down to `target`:
/// sqrt(-ln F') / (sqrt(N) dq t).
double standard_detectable_perturbation(Fidelity target, std::int64_t n_copies,
                                        double dq, double t);

/// Closed-form inverse of helstrom_min_error in F:
/// F' = Pe (1 - Pe) / (p0 p1). Requires 0 < Pe <= min(p0, p1).
Fidelity fidelity_for_target_error(double target_error,
                                   const BinaryHypothesis& prior);

inline constexpr double kDefaultFisherStep = 1e-3;

/// G = -2 d^2F/d delta^2 at delta = 0, from central second differences at
/// steps h and h/2 combined by Richardson extrapolation.
///
/// Throws DomainError if fidelity_fn(0) is not 1 within 1e-9 or any
/// evaluation is non-finite.
double quantum_fisher_information(const std::function<double(double)>& fidelity_fn,
                                  double step = kDefaultFisherStep);

/// Matrix form G_jk = -2 d^2F/d delta_j d delta_k at delta = 0 for a vector
/// perturbation of dimension `dim`. Same difference scheme as the scalar case.
Eigen::MatrixXd quantum_fisher_matrix(
    const std::function<double(const Eigen::VectorXd&)>& fidelity_fn, int dim,
    double step = kDefaultFisherStep);

}  // namespace qtedge
