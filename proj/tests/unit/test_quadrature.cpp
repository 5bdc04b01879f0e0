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
#include <numbers>

#include <gtest/gtest.h>

#include "qtedge/errors.hpp"
#include "qtedge/quadrature.hpp"

namespace qtedge::quadrature {
namespace {

TEST(Integrate, Polynomial) {
  const auto r = integrate([](double x) { return x * x * x - 2 * x; }, {0.0, 2.0});
  EXPECT_NEAR(r.value, 0.0, 1e-13);
  EXPECT_EQ(r.evaluations, 15);
}

TEST(Integrate, Oscillatory) {
  const auto r = integrate([](double x) { return std::cos(30 * x); }, {0.0, 1.0});
  EXPECT_NEAR(r.value, std::sin(30.0) / 30.0, 1e-10);
}

TEST(Integrate, BreakpointAtKink) {
  const auto r = integrate([](double x) { return std::abs(x - 0.3); }, {0.0, 0.3, 1.0});
  EXPECT_NEAR(r.value, 0.045 + 0.245, 1e-14);
}

TEST(Integrate, IntegrableEndpointSingularity) {
  Options o;
  o.rel_tol = 1e-7;
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, {0.0, 1.0}, o);
  EXPECT_NEAR(r.value, 2.0, 1e-6);
}

TEST(Integrate, Errors) {
  EXPECT_THROW(integrate([](double) { return 1.0; }, {0.0}), DomainError);
  EXPECT_THROW(integrate([](double) { return std::nan(""); }, {0.0, 1.0}), ConvergenceError);
  Options tiny;
  tiny.max_intervals = 2;
  tiny.rel_tol = 1e-14;
  EXPECT_THROW(integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, {0.0, 1.0}, tiny),
               ConvergenceError);
}

TEST(HalfLine, Lorentzian) {
  const auto r = integrate_half_line([](double x) { return 1.0 / (1.0 + x * x); }, {});
  EXPECT_NEAR(r.value, std::numbers::pi / 2, 1e-12);
}

TEST(HalfLine, NarrowPeakWithBreakpoint) {
  const double w = 1e-4, c = 50.0;
  auto f = [=](double x) { return w / ((x - c) * (x - c) + w * w); };
  const auto r = integrate_half_line(f, {c - 10 * w, c, c + 10 * w});
  EXPECT_NEAR(r.value, std::numbers::pi / 2 + std::atan(c / w), 1e-7);
}

}  // namespace
}  // namespace qtedge::quadrature
