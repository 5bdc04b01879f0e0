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

#include <cmath>

#include <gtest/gtest.h>

#include "qtedge/errors.hpp"
#include "qtedge/matrix_exp.hpp"

namespace qtedge::linalg {
namespace {

TEST(Expm, ZeroAndDiagonal) {
  EXPECT_TRUE(expm(Eigen::MatrixXd::Zero(4, 4)).isApprox(Eigen::MatrixXd::Identity(4, 4)));
  Eigen::MatrixXd d = Eigen::Vector3d(-2.0, 0.5, 7.0).asDiagonal();
  const Eigen::MatrixXd e = expm(d);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(e(i, i) / std::exp(d(i, i)), 1.0, 1e-14);
}

TEST(Expm, RotationGenerator) {
  for (double theta : {1e-8, 0.3, 2.0, 40.0}) {
    Eigen::MatrixXd a(2, 2);
    a << 0.0, theta, -theta, 0.0;
    const Eigen::MatrixXd e = expm(a);
    EXPECT_NEAR(e(0, 0), std::cos(theta), 1e-12);
    EXPECT_NEAR(e(0, 1), std::sin(theta), 1e-12);
    EXPECT_NEAR(e(1, 0), -std::sin(theta), 1e-12);
  }
}

TEST(Expm, NilpotentJordanBlock) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
  a(0, 1) = 1.0;
  a(1, 2) = 1.0;
  const Eigen::MatrixXd e = expm(a);
  EXPECT_NEAR(e(0, 2), 0.5, 1e-15);
  EXPECT_NEAR(e(0, 1), 1.0, 1e-15);
}

TEST(Expm, LargeNormUsesSquaring) {
  Eigen::MatrixXd a(2, 2);
  a << 0.0, 9.0, 9.0, 0.0;  // hyperbolic
  ExpmInfo info;
  const Eigen::MatrixXd e = expm(a, &info);
  EXPECT_EQ(info.pade_degree, 13);
  EXPECT_GT(info.squarings, 0);
  EXPECT_NEAR(e(0, 0) / std::cosh(9.0), 1.0, 1e-13);
  EXPECT_NEAR(e(0, 1) / std::sinh(9.0), 1.0, 1e-13);
}

TEST(Expm, SmallNormUsesLowDegree) {
  Eigen::MatrixXd a = 1e-4 * Eigen::MatrixXd::Random(4, 4);
  ExpmInfo info;
  expm(a, &info);
  EXPECT_EQ(info.pade_degree, 3);
  EXPECT_EQ(info.squarings, 0);
}

TEST(Expm, InverseProperty) {
  Eigen::MatrixXd a(4, 4);
  a << 0.1, 1.2, -0.3, 0.0, -2.0, 0.2, 0.5, 1.0, 0.7, -0.4, 0.0, 2.2, 0.3, 0.3, -1.5, -0.3;
  const Eigen::MatrixXd prod = expm(a) * expm(-a);
  EXPECT_LT((prod - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-12);
}

TEST(Expm, RejectsNonSquareAndNonFinite) {
  EXPECT_THROW(expm(Eigen::MatrixXd::Zero(2, 3)), DomainError);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 0) = std::nan("");
  EXPECT_THROW(expm(a), DomainError);
}

}  // namespace
}  // namespace qtedge::linalg
