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

#include "qtedge/matrix_exp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "qtedge/errors.hpp"

namespace qtedge::linalg {
namespace {

using Eigen::MatrixXd;

// Largest 1-norm for which the degree-m approximant reaches unit roundoff.
constexpr std::array<double, 5> kTheta = {1.495585217958292e-2, 2.539398330063230e-1,
                                          9.504178996162932e-1, 2.097847961257068e0,
                                          5.371920351148152e0};

constexpr std::array<double, 4> kB3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kB5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kB7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                       25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kB9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                        302702400.0,   30270240.0,   2162160.0,
                                        110880.0,      3960.0,       90.0,
                                        1.0};
constexpr std::array<double, 14> kB13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

// Numerator/denominator split p(A) = V + U, q(A) = V - U.
template <std::size_t N>
void pade_low(const MatrixXd& a, const std::array<double, N>& b, MatrixXd& u,
              MatrixXd& v) {
  const auto n = a.rows();
  const MatrixXd ident = MatrixXd::Identity(n, n);
  const MatrixXd a2 = a * a;
  MatrixXd power = ident;
  MatrixXd odd = MatrixXd::Zero(n, n);
  v = MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < N; k += 2) {
    v += b[k] * power;
    odd += b[k + 1] * power;
    power = power * a2;
  }
  u = a * odd;
}

void pade13(const MatrixXd& a, MatrixXd& u, MatrixXd& v) {
  const auto& b = kB13;
  const auto n = a.rows();
  const MatrixXd ident = MatrixXd::Identity(n, n);
  const MatrixXd a2 = a * a;
  const MatrixXd a4 = a2 * a2;
  const MatrixXd a6 = a4 * a2;
  const MatrixXd inner_u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                           b[5] * a4 + b[3] * a2 + b[1] * ident;
  u = a * inner_u;
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
      b[0] * ident;
}

}  // namespace

MatrixXd expm(const MatrixXd& a, ExpmInfo* info) {
  if (a.rows() != a.cols()) throw DomainError("expm requires a square matrix");
  const auto n = a.rows();
  if (n == 0) return MatrixXd(0, 0);
  if (!a.allFinite()) throw DomainError("expm argument has non-finite entries");

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  MatrixXd u, v;
  int degree = 13;
  int squarings = 0;

  if (norm1 <= kTheta[0]) {
    degree = 3;
    pade_low(a, kB3, u, v);
  } else if (norm1 <= kTheta[1]) {
    degree = 5;
    pade_low(a, kB5, u, v);
  } else if (norm1 <= kTheta[2]) {
    degree = 7;
    pade_low(a, kB7, u, v);
  } else if (norm1 <= kTheta[3]) {
    degree = 9;
    pade_low(a, kB9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / kTheta[4]))));
    pade13(a / std::ldexp(1.0, squarings), u, v);
  }

  const Eigen::PartialPivLU<MatrixXd> lu(v - u);
  const double rcond = lu.rcond();
  if (!(rcond > 10.0 * std::numeric_limits<double>::epsilon())) {
    throw ConvergenceError("expm: Pade denominator is singular (rcond=" +
                               std::to_string(rcond) + ")",
                           rcond);
  }
  MatrixXd result = lu.solve(v + u);
  for (int s = 0; s < squarings; ++s) result = result * result;

  if (!result.allFinite()) {
    throw ConvergenceError("expm: result overflowed after " +
                               std::to_string(squarings) + " squarings",
                           rcond);
  }
  if (info != nullptr) *info = {degree, squarings, rcond};
  return result;
}

}  // namespace qtedge::linalg
