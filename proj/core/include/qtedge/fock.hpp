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

// Brute-force reference computations: dense spin chains, truncated Fock
// spaces and exhaustive qubit measurements. Slow, tolerance-free ground truth
// for the analytic modules.

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qtedge/bosonic.hpp"
#include "qtedge/detection.hpp"
#include "qtedge/ising.hpp"

namespace qtedge::oracle {

inline constexpr int kMaxDenseDim = 8192;
inline constexpr double kDegeneracyGap = 1e-10;

/// Dense Hermitian operator. Symmetrized on construction; deviations from
/// Hermiticity above 1e-12 (relative to the largest entry) are rejected.
class DenseHermitian {
 public:
  explicit DenseHermitian(const Eigen::MatrixXcd& matrix);
  explicit DenseHermitian(Eigen::MatrixXd matrix);

  int dim() const noexcept { return static_cast<int>(real_.rows()); }
  /// All imaginary parts vanish; the real eigensolver is used.
  bool is_real() const noexcept { return imag_.size() == 0; }
  Eigen::MatrixXcd matrix() const;
  const Eigen::MatrixXd& real_part() const noexcept { return real_; }

 private:
  Eigen::MatrixXd real_;
  Eigen::MatrixXd imag_;  ///< empty for real operators
};

class StateVector {
 public:
  /// Requires unit norm within 1e-10.
  explicit StateVector(Eigen::VectorXcd amplitudes);
  int dim() const noexcept { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// Full eigendecomposition of a DenseHermitian, eigenvalues ascending.
/// Real operators keep real eigenvectors.
struct Spectrum {
  Eigen::VectorXd energies;
  Eigen::MatrixXd real_vectors;  ///< set for real operators
  Eigen::MatrixXcd vectors;      ///< set otherwise

  int dim() const noexcept { return static_cast<int>(energies.size()); }
  Eigen::VectorXcd vector(int k) const;
  /// Eigenbasis coefficients V^dag psi.
  Eigen::VectorXcd coefficients(const Eigen::VectorXcd& psi) const;
  Eigen::VectorXcd synthesize(const Eigen::VectorXcd& coefficients) const;
};
Spectrum diagonalize(const DenseHermitian& h);

struct GroundState {
  double energy = 0.0;
  StateVector state;
  double gap = 0.0;          ///< E_1 - E_0
  bool degenerate = false;   ///< gap < 1e-10
  std::optional<StateVector> partner;  ///< second vector when degenerate
};

/// Lowest eigenvector from a dense decomposition. Requires dim <= 8192.
GroundState ground_state_dense(const DenseHermitian& h);

/// exp(-i H t) |state> through the eigendecomposition of H.
StateVector evolve_dense(const StateVector& state, const DenseHermitian& h, double t);
StateVector evolve_dense(const StateVector& state, const Spectrum& spectrum, double t);

/// |<state| exp(-i H t) |state>|^2 for each t, from one decomposition.
std::vector<double> survival_probabilities(const StateVector& state, const Spectrum& spectrum,
                                           const std::vector<double>& times);

// ---------------------------------------------------------------------------
// Spin chains

inline constexpr int kMaxChainSites = 12;

/// -J sum_j (sz_j sz_{j+1} + g sx_j) on N periodic sites, in the sz basis
/// with site j at bit j.
DenseHermitian ising_chain_hamiltonian(int n_sites, double coupling, double g);

struct BruteForceFidelity {
  Fidelity fidelity{1.0};
  double ground_energy = 0.0;
  double gap = 0.0;
  bool degenerate = false;
  /// Fidelity from the other ground vector when the gap is below 1e-10.
  std::optional<Fidelity> partner;
};

/// |<psi| e^{i H0 t} e^{-i H1 t} |psi>|^2 for the dense periodic chain,
/// psi the ground state of H0. Requires 2 <= N <= 12.
BruteForceFidelity spin_chain_fidelity_bruteforce(const ising::IsingParams& params);

/// Same oracle at several times sharing one pair of decompositions
/// (params.t is ignored).
std::vector<BruteForceFidelity> spin_chain_fidelity_series(const ising::IsingParams& params,
                                                           const std::vector<double>& times);

// ---------------------------------------------------------------------------
// Truncated Fock space

inline constexpr int kMinFockTruncation = 50;
inline constexpr double kTruncationTolerance = 1e-8;

/// Annihilation operator on Fock states 0..D-1: <n-1|a|n> = sqrt(n).
Eigen::MatrixXd ladder(int truncation);

/// omega a^dag a + i lambda (a^dag^2 - a^2), truncated at D levels.
DenseHermitian squeezer_hamiltonian(double omega, double lambda, int truncation);

struct TruncatedFidelity {
  Fidelity fidelity{1.0};
  int truncation = 0;        ///< truncation of the accepted value
  double convergence = 0.0;  ///< |F(D_accepted) - F(previous D)|
};

/// Single-mode fidelity |<psi| exp(-i H1 t) |psi>|^2 with psi the ground state
/// of H0 = omega0 a^dag a + i lambda0 (...), computed in the even-parity
/// sector. omega0 > 0 and |2 lambda0| < omega0 are required; omega1 may be 0
/// (a pure squeezer). Convergence: F at D and 2D must agree within 1e-8,
/// otherwise one escalation to 4D; ConvergenceError beyond that.
TruncatedFidelity fock_single_mode_fidelity(double omega0, double lambda0, double omega1,
                                            double lambda1, double t, int truncation = 200);

/// OPO fidelity with the protocol above. Requires D >= 50. The truncated
/// ground state of H0 is checked against <a^dag a> = nu0^2.
TruncatedFidelity fock_opo_fidelity(const bosonic::OpoParams& params, int truncation = 200);

/// Fock-basis amplitudes of the b0 number states |n>_b, n = 0..n_max, with
/// b0 = mu0 a + i nu0 a^dag. Taken as eigenvectors of the truncated H0, whose
/// levels must sit on the ladder n eps0 within 1e-8 (ConvergenceError
/// otherwise). Columns are the states, up to phases.
Eigen::MatrixXcd b0_number_basis(double g0, int n_max, int truncation);

struct PhotonDistribution {
  std::vector<double> probabilities;
  double leakage = 0.0;  ///< 1 - sum of probabilities
};

/// P(n) = |<n_b|state>|^2 for the columns of `basis`. Throws ConvergenceError
/// when the leakage exceeds `max_leakage`.
PhotonDistribution photon_number_distribution(const StateVector& state,
                                              const Eigen::MatrixXcd& basis,
                                              double max_leakage = kTruncationTolerance);

/// Photon counts in the b0 mode after evolving the H0 ground state under H1
/// in the full truncated space (both parities).
PhotonDistribution opo_photon_statistics(const bosonic::OpoParams& params, int n_max,
                                         int truncation = 200);

/// Minimum average error for two pure states with |<a|b>|^2 = overlap_sq,
/// by golden-section search over projective qubit measurements.
double optimal_qubit_discrimination(Fidelity overlap_sq, const BinaryHypothesis& prior);

inline constexpr int kMaxDickeTruncation = 40;

/// omega (a^dag a + b^dag b) + lambda (a + a^dag)(b + b^dag), D levels per mode.
DenseHermitian dicke_hamiltonian(double omega, double lambda, int truncation);

/// Two-mode Dicke fidelity in the even total-parity sector. D <= 40. The
/// reference truncation is min(2D, 40) (or 3D/4 when D is already 40), so
/// the usual doubling is clipped to the dimension budget.
TruncatedFidelity fock_dicke_fidelity(const bosonic::DickeParams& params, int truncation = 30);

/// Same at several times (params.t ignored).
std::vector<TruncatedFidelity> fock_dicke_fidelity_series(const bosonic::DickeParams& params,
                                                          const std::vector<double>& times,
                                                          int truncation = 30);

}  // namespace qtedge::oracle
