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

// Zero-mean pure Gaussian states of n bosonic modes under quadratic
// Hamiltonians.
//
// Conventions: hbar = 1, quadratures r = (q1, p1, ..., qn, pn) with
// q = (a + a^dag)/sqrt(2), p = -i(a - a^dag)/sqrt(2), vacuum covariance I/2,
// H = r^T M r / 2 + constant.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qtedge/detection.hpp"

namespace qtedge::gaussian {

/// Block-diagonal symplectic form with 2x2 blocks [[0, 1], [-1, 0]].
class SymplecticForm {
 public:
  explicit SymplecticForm(int n_modes);

  int n_modes() const noexcept { return n_modes_; }
  const Eigen::MatrixXd& matrix() const noexcept { return omega_; }

 private:
  int n_modes_;
  Eigen::MatrixXd omega_;
};

class QuadraticHamiltonian {
 public:
  /// `m` must be square with even dimension; it is symmetrized on
  /// construction. Asymmetry larger than 1e-12 relative is rejected.
  explicit QuadraticHamiltonian(Eigen::MatrixXd m, double constant_offset = 0.0);

  int n_modes() const noexcept { return static_cast<int>(m_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const noexcept { return m_; }
  /// Energy shift from normal ordering; never enters a fidelity.
  double constant_offset() const noexcept { return constant_offset_; }

  /// Generator Omega M of the Heisenberg flow dr/dt = Omega M r.
  Eigen::MatrixXd generator() const;

 private:
  Eigen::MatrixXd m_;
  double constant_offset_;
};

class GaussianState {
 public:
  static GaussianState vacuum(int n_modes);

  /// Validates symmetry, positive definiteness and purity (all symplectic
  /// eigenvalues 1/2 within `purity_tolerance`).
  static GaussianState from_covariance(Eigen::MatrixXd sigma,
                                       double purity_tolerance = 1e-9);

  int n_modes() const noexcept { return static_cast<int>(sigma_.rows() / 2); }
  const Eigen::MatrixXd& covariance() const noexcept { return sigma_; }

  /// Symplectic eigenvalues, ascending, one per mode.
  Eigen::VectorXd symplectic_eigenvalues() const;
  /// max |nu_k - 1/2| over the symplectic spectrum.
  double purity_defect() const;

 private:
  explicit GaussianState(Eigen::MatrixXd sigma) : sigma_(std::move(sigma)) {}

  friend GaussianState evolve(const GaussianState&, const QuadraticHamiltonian&, double);
  friend GaussianState ground_state(const QuadraticHamiltonian&);

  Eigen::MatrixXd sigma_;
};

/// S = exp(Omega M t). Symplectic for every finite t, including Hamiltonians
/// with unstable (hyperbolic) directions.
Eigen::MatrixXd symplectic_propagator(const QuadraticHamiltonian& h, double t);

/// sigma' = S sigma S^T.
GaussianState evolve(const GaussianState& state, const QuadraticHamiltonian& h,
                     double t);

/// Eigenvalues of the generator Omega M. Stable Hamiltonians give +-i omega_k.
std::vector<std::complex<double>> dynamical_eigenvalues(const QuadraticHamiltonian& h);

/// Normal-mode frequencies of a positive-definite M, ascending. Throws
/// DomainError (naming the offending mode) when M is not positive definite.
Eigen::VectorXd normal_mode_frequencies(const QuadraticHamiltonian& h);

/// Largest real part among the generator eigenvalues: the exponential growth
/// rate of an unstable Hamiltonian, ~0 for a stable one.
double max_growth_rate(const QuadraticHamiltonian& h);

inline constexpr double kCriticalFrequency = 1e-10;

/// Covariance of the unique Gaussian ground state. With M = L L^T,
/// sigma = L^{-T} |L^T Omega L| L^{-1} / 2.
///
/// Throws DomainError for unstable, critical (|omega| < 1e-10) or
/// negative-energy Hamiltonians; the message names the offending
/// normal-mode frequency or growth rate.
GaussianState ground_state(const QuadraticHamiltonian& h);

/// |<a|b>|^2 = det(sigma_a + sigma_b)^{-1/2}, via a Cholesky factorization of
/// the (positive-definite) sum.
Fidelity pure_overlap(const GaussianState& a, const GaussianState& b);

}  // namespace qtedge::gaussian
