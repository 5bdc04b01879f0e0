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

#include "qtedge/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qtedge/errors.hpp"
#include "qtedge/matrix_exp.hpp"

namespace qtedge::gaussian {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void require_square_even(const MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw DomainError(std::string(what) + " must be a non-empty 2n x 2n matrix");
  }
  if (!m.allFinite()) throw DomainError(std::string(what) + " has non-finite entries");
}

MatrixXd symmetrized(const MatrixXd& m, const char* what) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError(std::string(what) + " is not symmetric");
  }
  return 0.5 * (m + m.transpose());
}

// Eigenvalues of A^T A for A = L^T Omega L come in equal pairs nu_k^2; return
// the sorted nu_k and optionally |A| = sqrt(A^T A).
VectorXd paired_sqrt_spectrum(const MatrixXd& a, MatrixXd* abs_a) {
  const MatrixXd ata = a.transpose() * a;
  const Eigen::SelfAdjointEigenSolver<MatrixXd> eig(0.5 * (ata + ata.transpose()));
  const VectorXd lambda = eig.eigenvalues().cwiseMax(0.0);
  const VectorXd roots = lambda.cwiseSqrt();
  if (abs_a != nullptr) {
    *abs_a = eig.eigenvectors() * roots.asDiagonal() * eig.eigenvectors().transpose();
  }
  const auto n = roots.size() / 2;
  VectorXd nu(n);
  for (Eigen::Index k = 0; k < n; ++k) nu(k) = 0.5 * (roots(2 * k) + roots(2 * k + 1));
  return nu;
}

std::string describe_no_ground_state(const QuadraticHamiltonian& h) {
  const auto evs = dynamical_eigenvalues(h);
  const double scale = std::max(1.0, h.matrix().cwiseAbs().maxCoeff());
  std::ostringstream msg;
  msg.precision(6);
  for (const auto& ev : evs) {
    if (std::abs(ev.real()) > 1e-9 * scale && ev.real() > 0.0) {
      msg << "unstable Hamiltonian: normal mode with growth rate " << ev.real()
          << " has no ground state";
      return msg.str();
    }
  }
  for (const auto& ev : evs) {
    if (std::abs(ev) < kCriticalFrequency * scale) {
      msg << "critical Hamiltonian: normal-mode frequency " << std::abs(ev)
          << " is below " << kCriticalFrequency;
      return msg.str();
    }
  }
  double lowest = 0.0;
  for (const auto& ev : evs) lowest = std::max(lowest, std::abs(ev.imag()));
  msg << "Hamiltonian is not bounded below: negative-energy normal mode (|omega| <= "
      << lowest << ")";
  return msg.str();
}

}  // namespace

SymplecticForm::SymplecticForm(int n_modes) : n_modes_(n_modes) {
  if (n_modes < 1) throw DomainError("symplectic form needs at least one mode");
  omega_ = MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega_(2 * k, 2 * k + 1) = 1.0;
    omega_(2 * k + 1, 2 * k) = -1.0;
  }
}

QuadraticHamiltonian::QuadraticHamiltonian(MatrixXd m, double constant_offset)
    : constant_offset_(constant_offset) {
  require_square_even(m, "Hamiltonian matrix");
  m_ = symmetrized(m, "Hamiltonian matrix");
}

MatrixXd QuadraticHamiltonian::generator() const {
  return SymplecticForm(n_modes()).matrix() * m_;
}

GaussianState GaussianState::vacuum(int n_modes) {
  if (n_modes < 1) throw DomainError("vacuum needs at least one mode");
  return GaussianState(0.5 * MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState GaussianState::from_covariance(MatrixXd sigma, double purity_tolerance) {
  require_square_even(sigma, "covariance");
  GaussianState state(symmetrized(sigma, "covariance"));
  const Eigen::LLT<MatrixXd> llt(state.sigma_);
  if (llt.info() != Eigen::Success) {
    throw DomainError("covariance is not positive definite");
  }
  const double defect = state.purity_defect();
  if (defect > purity_tolerance) {
    throw DomainError("covariance is not a pure state: symplectic eigenvalues deviate "
                      "from 1/2 by " + std::to_string(defect));
  }
  return state;
}

VectorXd GaussianState::symplectic_eigenvalues() const {
  const Eigen::LLT<MatrixXd> llt(sigma_);
  if (llt.info() != Eigen::Success) {
    throw DomainError("covariance is not positive definite");
  }
  const MatrixXd l = llt.matrixL();
  const MatrixXd a = l.transpose() * SymplecticForm(n_modes()).matrix() * l;
  return paired_sqrt_spectrum(a, nullptr);
}

double GaussianState::purity_defect() const {
  return (symplectic_eigenvalues().array() - 0.5).abs().maxCoeff();
}

MatrixXd symplectic_propagator(const QuadraticHamiltonian& h, double t) {
  if (!std::isfinite(t)) throw DomainError("propagation time must be finite");
  return linalg::expm(h.generator() * t);
}

GaussianState evolve(const GaussianState& state, const QuadraticHamiltonian& h,
                     double t) {
  if (state.n_modes() != h.n_modes()) {
    throw DomainError("state has " + std::to_string(state.n_modes()) +
                      " modes but Hamiltonian has " + std::to_string(h.n_modes()));
  }
  const MatrixXd s = symplectic_propagator(h, t);
  const MatrixXd out = s * state.covariance() * s.transpose();
  return GaussianState(0.5 * (out + out.transpose()));
}

std::vector<std::complex<double>> dynamical_eigenvalues(const QuadraticHamiltonian& h) {
  const Eigen::EigenSolver<MatrixXd> eig(h.generator(), false);
  const Eigen::VectorXcd values = eig.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

VectorXd normal_mode_frequencies(const QuadraticHamiltonian& h) {
  const Eigen::SelfAdjointEigenSolver<MatrixXd> spectrum(h.matrix(), Eigen::EigenvaluesOnly);
  if (!(spectrum.eigenvalues().minCoeff() > 0.0)) {
    throw DomainError(describe_no_ground_state(h));
  }
  const Eigen::LLT<MatrixXd> llt(h.matrix());
  const MatrixXd l = llt.matrixL();
  const MatrixXd a = l.transpose() * SymplecticForm(h.n_modes()).matrix() * l;
  return paired_sqrt_spectrum(a, nullptr);
}

double max_growth_rate(const QuadraticHamiltonian& h) {
  double rate = 0.0;
  for (const auto& ev : dynamical_eigenvalues(h)) rate = std::max(rate, ev.real());
  return rate;
}

GaussianState ground_state(const QuadraticHamiltonian& h) {
  const Eigen::SelfAdjointEigenSolver<MatrixXd> spectrum(h.matrix(), Eigen::EigenvaluesOnly);
  if (!(spectrum.eigenvalues().minCoeff() > 0.0)) {
    throw DomainError(describe_no_ground_state(h));
  }
  const Eigen::LLT<MatrixXd> llt(h.matrix());
  if (llt.info() != Eigen::Success) throw DomainError(describe_no_ground_state(h));

  const MatrixXd l = llt.matrixL();
  const MatrixXd a = l.transpose() * SymplecticForm(h.n_modes()).matrix() * l;
  MatrixXd abs_a;
  const VectorXd freqs = paired_sqrt_spectrum(a, &abs_a);
  if (freqs.minCoeff() < kCriticalFrequency) {
    std::ostringstream msg;
    msg << "critical Hamiltonian: normal-mode frequency " << freqs.minCoeff()
        << " is below " << kCriticalFrequency;
    throw DomainError(msg.str());
  }

  // sigma = L^{-T} |A| L^{-1} / 2
  const auto upper = llt.matrixU();  // L^T
  const MatrixXd y = upper.solve(abs_a);              // L^{-T} |A|
  const MatrixXd z = upper.solve(y.transpose());      // (L^{-T} |A| L^{-1})^T
  MatrixXd sigma = 0.25 * (z + z.transpose());
  return GaussianState(std::move(sigma));
}

Fidelity pure_overlap(const GaussianState& a, const GaussianState& b) {
  if (a.n_modes() != b.n_modes()) {
    throw DomainError("overlap of states with different mode counts");
  }
  const MatrixXd sum = a.covariance() + b.covariance();
  const Eigen::LLT<MatrixXd> llt(sum);
  if (llt.info() != Eigen::Success) {
    throw DomainError("sigma_a + sigma_b is not positive definite (corrupted state)");
  }
  const MatrixXd l = llt.matrixL();
  double log_sqrt_det = 0.0;
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    if (!(l(i, i) > 0.0)) {
      throw DomainError("sigma_a + sigma_b has a non-positive determinant");
    }
    log_sqrt_det += std::log(l(i, i));
  }
  return Fidelity(std::exp(-log_sqrt_det));
}

}  // namespace qtedge::gaussian
