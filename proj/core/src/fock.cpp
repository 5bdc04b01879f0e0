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

#include "qtedge/fock.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "qtedge/errors.hpp"

namespace qtedge::oracle {
namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void require_dim(int dim) {
  if (dim < 1) throw DomainError("dense operator must have dim >= 1");
  if (dim > kMaxDenseDim) {
    throw DomainError("dense operator dim " + std::to_string(dim) + " exceeds the limit " +
                      std::to_string(kMaxDenseDim));
  }
}

// Sub-block on a list of basis indices (a conserved-parity sector).
DenseHermitian restrict(const DenseHermitian& h, const std::vector<int>& idx) {
  if (h.is_real()) return DenseHermitian(Eigen::MatrixXd(h.real_part()(idx, idx)));
  const Eigen::MatrixXcd full = h.matrix();
  return DenseHermitian(Eigen::MatrixXcd(full(idx, idx)));
}

std::vector<int> even_levels(int truncation) {
  std::vector<int> idx;
  for (int n = 0; n < truncation; n += 2) idx.push_back(n);
  return idx;
}

double nu_squared(double g) { return 0.5 * (1.0 / std::sqrt(1.0 - g * g) - 1.0); }

void check_squeezed_ground(const Eigen::VectorXcd& psi, const std::vector<int>& levels,
                           double g0) {
  double mean_n = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) mean_n += levels[i] * std::norm(psi[i]);
  const double expected = nu_squared(g0);
  if (std::abs(mean_n - expected) > 1e-8 * std::max(1.0, expected)) {
    std::ostringstream msg;
    msg << "truncated ground state has <a^dag a> = " << mean_n << ", expected " << expected
        << "; truncation too small";
    throw ConvergenceError(msg.str(), std::abs(mean_n - expected));
  }
}

double single_mode_even(double omega0, double lambda0, double omega1, double lambda1,
                        const std::vector<double>& times, int truncation,
                        std::vector<double>* out) {
  const auto levels = even_levels(truncation);
  const DenseHermitian h0 = restrict(squeezer_hamiltonian(omega0, lambda0, truncation), levels);
  const DenseHermitian h1 = restrict(squeezer_hamiltonian(omega1, lambda1, truncation), levels);
  const GroundState ground = ground_state_dense(h0);
  check_squeezed_ground(ground.state.amplitudes(), levels, 2.0 * lambda0 / omega0);
  *out = survival_probabilities(ground.state, diagonalize(h1), times);
  return out->front();
}

template <typename Eval>
std::vector<TruncatedFidelity> converge(Eval eval, int truncation, std::size_t n_times) {
  std::vector<double> coarse, fine;
  eval(truncation, coarse);
  eval(2 * truncation, fine);
  auto gap = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
  };
  int accepted = 2 * truncation;
  double delta = gap(coarse, fine);
  if (!(delta < kTruncationTolerance)) {
    coarse = fine;
    eval(4 * truncation, fine);
    accepted = 4 * truncation;
    delta = gap(coarse, fine);
    if (!(delta < kTruncationTolerance)) {
      std::ostringstream msg;
      msg << "Fock truncation did not converge: |dF| = " << delta << " between D = "
          << 2 * truncation << " and D = " << 4 * truncation;
      throw ConvergenceError(msg.str(), delta);
    }
  }
  std::vector<TruncatedFidelity> out(n_times);
  for (std::size_t i = 0; i < n_times; ++i) {
    out[i].fidelity = Fidelity(fine[i]);
    out[i].truncation = accepted;
    out[i].convergence = std::abs(fine[i] - coarse[i]);
  }
  return out;
}

std::vector<int> even_pairs(int truncation) {
  std::vector<int> idx;
  for (int na = 0; na < truncation; ++na) {
    for (int nb = 0; nb < truncation; ++nb) {
      if ((na + nb) % 2 == 0) idx.push_back(na * truncation + nb);
    }
  }
  return idx;
}

void dicke_even(const bosonic::DickeParams& p, const std::vector<double>& times,
                int truncation, std::vector<double>& out) {
  const auto idx = even_pairs(truncation);
  const DenseHermitian h0 = restrict(dicke_hamiltonian(p.omega0, p.lambda0, truncation), idx);
  const DenseHermitian h1 = restrict(dicke_hamiltonian(p.omega1, p.lambda1, truncation), idx);
  const GroundState ground = ground_state_dense(h0);
  out = survival_probabilities(ground.state, diagonalize(h1), times);
}

}  // namespace

DenseHermitian::DenseHermitian(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols()) throw DomainError("Hermitian operator must be square");
  require_dim(static_cast<int>(matrix.rows()));
  Eigen::MatrixXd re = matrix.real();
  Eigen::MatrixXd im = matrix.imag();
  const double scale = std::max({1.0, max_abs(re), max_abs(im)});
  const double asym = std::max(max_abs(re - re.transpose()), max_abs(im + im.transpose()));
  if (asym > 1e-12 * scale) {
    throw DomainError("operator is not Hermitian (deviation " + std::to_string(asym) + ")");
  }
  real_ = 0.5 * (re + re.transpose());
  if (max_abs(im) > 0.0) imag_ = 0.5 * (im - im.transpose());
}

DenseHermitian::DenseHermitian(Eigen::MatrixXd matrix) {
  if (matrix.rows() != matrix.cols()) throw DomainError("Hermitian operator must be square");
  require_dim(static_cast<int>(matrix.rows()));
  const double asym = max_abs(matrix - matrix.transpose());
  if (asym > 1e-12 * std::max(1.0, max_abs(matrix))) {
    throw DomainError("operator is not symmetric (deviation " + std::to_string(asym) + ")");
  }
  real_ = 0.5 * (matrix + matrix.transpose());
}

Eigen::MatrixXcd DenseHermitian::matrix() const {
  Eigen::MatrixXcd m = real_.cast<cd>();
  if (!is_real()) m += kI * imag_.cast<cd>();
  return m;
}

StateVector::StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw DomainError("state vector must be non-empty");
  const double norm = amplitudes_.norm();
  if (!(std::abs(norm - 1.0) <= 1e-10)) {
    throw DomainError("state vector norm " + std::to_string(norm) + " differs from 1");
  }
}

Eigen::VectorXcd Spectrum::vector(int k) const {
  if (real_vectors.size()) return real_vectors.col(k).cast<cd>();
  return vectors.col(k);
}

Eigen::VectorXcd Spectrum::coefficients(const Eigen::VectorXcd& psi) const {
  if (real_vectors.size()) {
    const Eigen::VectorXd re = real_vectors.transpose() * psi.real();
    const Eigen::VectorXd im = real_vectors.transpose() * psi.imag();
    return re.cast<cd>() + kI * im.cast<cd>();
  }
  return vectors.adjoint() * psi;
}

Eigen::VectorXcd Spectrum::synthesize(const Eigen::VectorXcd& c) const {
  if (real_vectors.size()) {
    const Eigen::VectorXd re = real_vectors * c.real();
    const Eigen::VectorXd im = real_vectors * c.imag();
    return re.cast<cd>() + kI * im.cast<cd>();
  }
  return vectors * c;
}

Spectrum diagonalize(const DenseHermitian& h) {
  Spectrum s;
  if (h.is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.real_part());
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("dense eigensolver failed", std::numeric_limits<double>::infinity());
    }
    s.energies = solver.eigenvalues();
    s.real_vectors = solver.eigenvectors();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("dense eigensolver failed", std::numeric_limits<double>::infinity());
    }
    s.energies = solver.eigenvalues();
    s.vectors = solver.eigenvectors();
  }
  return s;
}

GroundState ground_state_dense(const DenseHermitian& h) {
  const Spectrum s = diagonalize(h);
  GroundState g{s.energies[0], StateVector(s.vector(0).normalized()), 0.0, false, std::nullopt};
  if (s.dim() > 1) {
    g.gap = s.energies[1] - s.energies[0];
    g.degenerate = g.gap < kDegeneracyGap;
    if (g.degenerate) g.partner = StateVector(s.vector(1).normalized());
  } else {
    g.gap = std::numeric_limits<double>::infinity();
  }
  return g;
}

StateVector evolve_dense(const StateVector& state, const Spectrum& spectrum, double t) {
  if (state.dim() != spectrum.dim()) throw DomainError("state and Hamiltonian dims differ");
  Eigen::VectorXcd c = spectrum.coefficients(state.amplitudes());
  for (int k = 0; k < c.size(); ++k) c[k] *= std::exp(-kI * (spectrum.energies[k] * t));
  return StateVector(spectrum.synthesize(c));
}

StateVector evolve_dense(const StateVector& state, const DenseHermitian& h, double t) {
  if (state.dim() != h.dim()) throw DomainError("state and Hamiltonian dims differ");
  return evolve_dense(state, diagonalize(h), t);
}

std::vector<double> survival_probabilities(const StateVector& state, const Spectrum& spectrum,
                                           const std::vector<double>& times) {
  if (state.dim() != spectrum.dim()) throw DomainError("state and Hamiltonian dims differ");
  const Eigen::VectorXcd c = spectrum.coefficients(state.amplitudes());
  const Eigen::VectorXd weight = c.cwiseAbs2();
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    cd amp = 0.0;
    for (int k = 0; k < weight.size(); ++k) amp += weight[k] * std::exp(-kI * (spectrum.energies[k] * t));
    out.push_back(std::min(1.0, std::norm(amp)));
  }
  return out;
}

DenseHermitian ising_chain_hamiltonian(int n_sites, double coupling, double g) {
  if (n_sites < 2 || n_sites > kMaxChainSites) {
    throw DomainError("dense chain needs 2 <= N <= " + std::to_string(kMaxChainSites) +
                      ", got N = " + std::to_string(n_sites));
  }
  const int dim = 1 << n_sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    double zz = 0.0;
    for (int j = 0; j < n_sites; ++j) {
      const int k = (j + 1) % n_sites;
      const int zj = (s >> j) & 1 ? -1 : 1;
      const int zk = (s >> k) & 1 ? -1 : 1;
      zz += zj * zk;
      h(s ^ (1 << j), s) += -coupling * g;
    }
    h(s, s) = -coupling * zz;
  }
  return DenseHermitian(std::move(h));
}

std::vector<BruteForceFidelity> spin_chain_fidelity_series(const ising::IsingParams& params,
                                                           const std::vector<double>& times) {
  if (params.n_sites > kMaxChainSites) {
    throw DomainError("brute-force chain limited to N <= " + std::to_string(kMaxChainSites));
  }
  if (!(params.coupling > 0.0)) throw DomainError("J must be > 0");
  const int n = static_cast<int>(params.n_sites);
  const DenseHermitian h0 = ising_chain_hamiltonian(n, params.coupling, params.g0);
  const DenseHermitian h1 = ising_chain_hamiltonian(n, params.coupling, params.g1);
  const GroundState ground = ground_state_dense(h0);
  const Spectrum s1 = diagonalize(h1);

  // e^{i H0 t} only contributes a phase on a ground vector of H0.
  const auto main = survival_probabilities(ground.state, s1, times);
  std::vector<double> partner;
  if (ground.partner) partner = survival_probabilities(*ground.partner, s1, times);

  std::vector<BruteForceFidelity> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    out[i].fidelity = Fidelity(main[i]);
    out[i].ground_energy = ground.energy;
    out[i].gap = ground.gap;
    out[i].degenerate = ground.degenerate;
    if (ground.partner) out[i].partner = Fidelity(partner[i]);
  }
  return out;
}

BruteForceFidelity spin_chain_fidelity_bruteforce(const ising::IsingParams& params) {
  if (!(params.t >= 0.0)) throw DomainError("t must be >= 0");
  return spin_chain_fidelity_series(params, {params.t}).front();
}

Eigen::MatrixXd ladder(int truncation) {
  if (truncation < 2) throw DomainError("truncation must be >= 2");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(truncation, truncation);
  for (int n = 1; n < truncation; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

DenseHermitian squeezer_hamiltonian(double omega, double lambda, int truncation) {
  const Eigen::MatrixXd a = ladder(truncation);
  const Eigen::MatrixXd a2 = a * a;
  Eigen::MatrixXcd h = (omega * a.transpose() * a).cast<cd>();
  h += kI * lambda * (a2.transpose() - a2).cast<cd>();
  return DenseHermitian(h);
}

TruncatedFidelity fock_single_mode_fidelity(double omega0, double lambda0, double omega1,
                                            double lambda1, double t, int truncation) {
  if (!(omega0 > 0.0)) throw DomainError("omega0 must be > 0");
  if (!(std::abs(2.0 * lambda0) < omega0)) throw DomainError("H0 must be below threshold");
  if (!(omega1 >= 0.0) || !std::isfinite(lambda1)) throw DomainError("invalid H1");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be finite and >= 0");
  if (truncation < kMinFockTruncation) {
    throw DomainError("Fock truncation must be >= " + std::to_string(kMinFockTruncation));
  }
  auto eval = [&](int d, std::vector<double>& out) {
    single_mode_even(omega0, lambda0, omega1, lambda1, {t}, d, &out);
  };
  return converge(eval, truncation, 1).front();
}

TruncatedFidelity fock_opo_fidelity(const bosonic::OpoParams& params, int truncation) {
  params.validate();
  return fock_single_mode_fidelity(params.omega0, params.lambda0, params.omega1,
                                   params.lambda1, params.t, truncation);
}

Eigen::MatrixXcd b0_number_basis(double g0, int n_max, int truncation) {
  if (!(std::abs(g0) < 1.0)) throw DomainError("b0 basis requires |g0| < 1");
  if (n_max < 0 || n_max >= truncation) throw DomainError("need 0 <= n_max < truncation");
  // H0 = eps0 b0^dag b0 + const, so its eigenvectors are the b0 number states.
  const Spectrum s = diagonalize(squeezer_hamiltonian(1.0, 0.5 * g0, truncation));
  const double eps0 = std::sqrt(1.0 - g0 * g0);
  Eigen::MatrixXcd basis(truncation, n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double level = (s.energies[n] - s.energies[0]) / eps0;
    if (std::abs(level - n) > 1e-8 * std::max(1, n)) {
      std::ostringstream msg;
      msg << "truncated b0 ladder is off at n = " << n << " (level " << level
          << "); enlarge the truncation";
      throw ConvergenceError(msg.str(), std::abs(level - n));
    }
    basis.col(n) = s.vector(n);
  }
  return basis;
}

PhotonDistribution photon_number_distribution(const StateVector& state,
                                              const Eigen::MatrixXcd& basis,
                                              double max_leakage) {
  if (basis.rows() != state.dim()) throw DomainError("basis and state dims differ");
  PhotonDistribution d;
  const Eigen::VectorXcd c = basis.adjoint() * state.amplitudes();
  double total = 0.0;
  for (int n = 0; n < c.size(); ++n) {
    d.probabilities.push_back(std::norm(c[n]));
    total += d.probabilities.back();
  }
  d.leakage = std::max(0.0, 1.0 - total);
  if (d.leakage > max_leakage) {
    std::ostringstream msg;
    msg << "photon distribution leaks " << d.leakage << " beyond n = " << c.size() - 1
        << "; enlarge n_max or the truncation";
    throw ConvergenceError(msg.str(), d.leakage);
  }
  return d;
}

PhotonDistribution opo_photon_statistics(const bosonic::OpoParams& params, int n_max,
                                         int truncation) {
  params.validate();
  if (truncation < kMinFockTruncation) {
    throw DomainError("Fock truncation must be >= " + std::to_string(kMinFockTruncation));
  }
  const DenseHermitian h0 = squeezer_hamiltonian(params.omega0, params.lambda0, truncation);
  const DenseHermitian h1 = squeezer_hamiltonian(params.omega1, params.lambda1, truncation);
  const GroundState ground = ground_state_dense(h0);
  const StateVector evolved = evolve_dense(ground.state, h1, params.t);
  return photon_number_distribution(evolved, b0_number_basis(params.g0(), n_max, truncation));
}

double optimal_qubit_discrimination(Fidelity overlap_sq, const BinaryHypothesis& prior) {
  const double f = overlap_sq.value();
  const double c = std::sqrt(f);
  const double s = std::sqrt(1.0 - f);
  const double p0 = prior.p0();
  const double p1 = prior.p1();
  // Outcome (cos th, -sin th) decides H0, its complement decides H1;
  // psi0 = (1, 0), psi1 = (c, s).
  auto error = [&](double th) {
    const double miss = std::cos(th) * c - std::sin(th) * s;
    const double sn = std::sin(th);
    return p0 * sn * sn + p1 * miss * miss;
  };
  constexpr int kGrid = 2048;
  const double lo = -0.5 * std::numbers::pi;
  const double step = std::numbers::pi / kGrid;
  int best = 0;
  double best_value = error(lo);
  for (int i = 1; i <= kGrid; ++i) {
    const double v = error(lo + i * step);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = lo + (best - 1) * step;
  double b = lo + (best + 1) * step;
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = error(x1);
  double f2 = error(x2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = error(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = error(x2);
    }
  }
  return std::min({best_value, f1, f2, error(0.5 * (a + b))});
}

DenseHermitian dicke_hamiltonian(double omega, double lambda, int truncation) {
  if (truncation < 2 || truncation > kMaxDickeTruncation) {
    throw DomainError("Dicke truncation must lie in [2, " +
                      std::to_string(kMaxDickeTruncation) + "]");
  }
  const Eigen::MatrixXd a = ladder(truncation);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(truncation, truncation);
  const Eigen::MatrixXd n = a.transpose() * a;
  const Eigen::MatrixXd x = a + a.transpose();
  const int dim = truncation * truncation;
  Eigen::MatrixXd h(dim, dim);
  // Kronecker products with mode a as the slow index.
  for (int i = 0; i < truncation; ++i) {
    for (int j = 0; j < truncation; ++j) {
      h.block(i * truncation, j * truncation, truncation, truncation) =
          omega * (n(i, j) * id + id(i, j) * n) + lambda * x(i, j) * x;
    }
  }
  return DenseHermitian(std::move(h));
}

std::vector<TruncatedFidelity> fock_dicke_fidelity_series(const bosonic::DickeParams& params,
                                                          const std::vector<double>& times,
                                                          int truncation) {
  params.validate();
  if (truncation < 4 || truncation > kMaxDickeTruncation) {
    throw DomainError("Dicke truncation must lie in [4, " +
                      std::to_string(kMaxDickeTruncation) + "]");
  }
  for (double t : times) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("times must be finite and >= 0");
  }
  const int reference = truncation < kMaxDickeTruncation
                            ? std::min(2 * truncation, kMaxDickeTruncation)
                            : 3 * truncation / 4;
  std::vector<double> at_d, at_ref;
  dicke_even(params, times, truncation, at_d);
  dicke_even(params, times, reference, at_ref);
  const bool ref_finer = reference > truncation;
  const std::vector<double>& accepted = ref_finer ? at_ref : at_d;
  std::vector<TruncatedFidelity> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double delta = std::abs(at_d[i] - at_ref[i]);
    if (!(delta < kTruncationTolerance)) {
      std::ostringstream msg;
      msg << "Dicke truncation did not converge at t = " << times[i] << ": |dF| = " << delta
          << " between D = " << truncation << " and D = " << reference;
      throw ConvergenceError(msg.str(), delta);
    }
    out[i].fidelity = Fidelity(accepted[i]);
    out[i].truncation = std::max(truncation, reference);
    out[i].convergence = delta;
  }
  return out;
}

TruncatedFidelity fock_dicke_fidelity(const bosonic::DickeParams& params, int truncation) {
  return fock_dicke_fidelity_series(params, {params.t}, truncation).front();
}

}  // namespace qtedge::oracle
