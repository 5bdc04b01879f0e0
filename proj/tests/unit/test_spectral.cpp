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
#include <limits>

#include <gtest/gtest.h>

#include "qtedge/errors.hpp"
#include "qtedge/spectral.hpp"

namespace qtedge::spectral {
namespace {

TEST(Threshold, Location) {
  EXPECT_DOUBLE_EQ(threshold_g(0.0), 1.0);
  EXPECT_NEAR(threshold_g(1.0), 1.0 / std::sqrt(0.75), 1e-15);
  EXPECT_TRUE(std::isinf(threshold_g(2.0)));
  EXPECT_EQ(classify(0.5, 0.2), Regime::kBelowThreshold);
  EXPECT_EQ(classify(threshold_g(0.2), 0.2), Regime::kAtThreshold);
  EXPECT_EQ(classify(1.1, 0.2), Regime::kAboveThreshold);
}

TEST(IdlerGain, Examples) {
  // Omega = 0, g = 1/sqrt(2), Gamma = 1: u = 1, D = (0 - 0.75)^2 + 1.
  EXPECT_NEAR(idler_gain(0.0, 1.0 / std::sqrt(2.0), 1.0), 1.0 / 1.5625, 1e-14);
  // The Omega = 0 denominator vanishes exactly at threshold.
  EXPECT_GT(idler_gain(0.0, threshold_g(0.5), 0.5), 1e12);
  EXPECT_LT(idler_gain(0.0, 0.99 * threshold_g(0.5), 0.5), 1e4);
  SpectralParams above = SpectralParams::from_normalized(2.0, 0.5);
  EXPECT_THROW(output_spectrum(0.0, above), DomainError);
}

TEST(IdlerGain, DerivativeMatchesFiniteDifference) {
  for (double w : {0.0, 0.4, 1.3}) {
    const double g = 0.7, gamma = 0.3, h = 1e-6;
    const double fd = (idler_gain(w, g + h, gamma) - idler_gain(w, g - h, gamma)) / (2 * h);
    EXPECT_NEAR(idler_gain_dg(w, g, gamma), fd, 1e-6 * std::abs(fd) + 1e-10);
  }
}

TEST(FisherThreshold, Bounds) {
  const double small = normalized_fisher_threshold(1e-3);
  EXPECT_GT(small, 3.99);
  EXPECT_LE(small, 4.0);
  EXPECT_NEAR(normalized_fisher_threshold(2.0), 1.532, 0.002);
  double last = 4.0;
  for (double gamma : {0.1, 0.5, 1.0, 1.9}) {
    const double v = normalized_fisher_threshold(gamma);
    EXPECT_GT(v, 1.532);
    EXPECT_LT(v, last);
    last = v;
  }
  EXPECT_THROW(normalized_fisher_threshold(0.0), DomainError);
}

TEST(FisherBelowThreshold, FrozenValues) {
  EXPECT_NEAR(normalized_fisher(0.5, 0.01), 1.28262e-6, 1e-10);
  EXPECT_NEAR(normalized_fisher(0.9, 0.01), 3.78259e-4, 1e-8);
  EXPECT_NEAR(normalized_fisher(0.99, 0.01), 0.0129909, 1e-6);
}

TEST(FisherBelowThreshold, FormsAgree) {
  for (double g : {0.3, 0.6, 0.9}) {
    for (double gamma : {0.05, 0.2, 1.0}) {
      const double a = normalized_fisher(g, gamma);
      const double b = normalized_fisher_gain_form(g, gamma);
      EXPECT_NEAR(a / b, 1.0, 1e-6) << g << " " << gamma;
    }
  }
}

TEST(FisherBelowThreshold, VanishesWithoutPump) {
  EXPECT_LT(normalized_fisher(1e-3, 0.2), 1e-6);
  EXPECT_THROW(normalized_fisher(1.2, 0.2), DomainError);
}

TEST(FisherBelowThreshold, ExcessNoiseLowersInformation) {
  const double clean = normalized_fisher(0.6, 0.2);
  const double noisy = normalized_fisher(0.6, 0.2, {0.5, 2.0});
  EXPECT_LT(noisy, clean);
}

TEST(Bhattacharyya, NonNegativeAndSymmetric) {
  EXPECT_EQ(bhattacharyya_distance(0.6, 0.6, 0.2, 0.5, 1.0), 0.0);
  const double ab = bhattacharyya_distance(0.5, 0.7, 0.2, 0.5, 1.0);
  EXPECT_GT(ab, 0.0);
  EXPECT_NEAR(ab, bhattacharyya_distance(0.7, 0.5, 0.2, 0.5, 1.0), 1e-12);
  EXPECT_NEAR(bhattacharyya_distance(0.5, 0.7, 0.2, 0.5, 3.0), 3.0 * ab, 1e-12);
}

TEST(Bhattacharyya, SecondDifferenceMatchesDirect) {
  const auto p = SpectralParams::from_normalized(0.6, 0.2);
  const double direct = fisher_information(p);
  EXPECT_NEAR(fisher_from_bhattacharyya(p) / direct, 1.0, 1e-4);
}

TEST(PhysicalUnits, Scaling) {
  auto p = SpectralParams::from_normalized(0.6, 0.2, 0.5, 2.0);
  const double norm = normalized_fisher(0.6, 0.2);
  EXPECT_NEAR(fisher_information(p),
              norm * p.omega_m * p.omega_m * p.t / std::pow(p.gamma, 3), 1e-12 * norm);
  p.lam = 0.0;
  EXPECT_THROW(p.validate(), DomainError);
}

TEST(Sweep, OrderedAndFlagged) {
  EXPECT_TRUE(fisher_sweep(0.01, {}).empty());
  const auto grid = log_grid(0.5, 0.99, 16);
  const auto one = fisher_sweep(0.01, grid, {}, 1);
  const auto many = fisher_sweep(0.01, grid, {}, 4);
  ASSERT_EQ(one.size(), grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(one[i].g, grid[i]);
    EXPECT_EQ(one[i].normalized_fisher, many[i].normalized_fisher);
    if (i > 0) EXPECT_GT(one[i].normalized_fisher, one[i - 1].normalized_fisher);
  }
  const auto bad = fisher_sweep(0.01, {0.5, 3.0, 0.6});
  EXPECT_TRUE(bad[0].ok);
  EXPECT_FALSE(bad[1].ok);
  EXPECT_TRUE(std::isnan(bad[1].normalized_fisher));
  EXPECT_FALSE(bad[1].error.empty());
  EXPECT_TRUE(bad[2].ok);
}

TEST(Sweep, LogGrid) {
  const auto g = log_grid(1.0, 100.0, 3);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_DOUBLE_EQ(g[0], 1.0);
  EXPECT_NEAR(g[1], 10.0, 1e-13);
  EXPECT_DOUBLE_EQ(g[2], 100.0);
  EXPECT_EQ(log_grid(2.0, 5.0, 1), std::vector<double>{2.0});
}

}  // namespace
}  // namespace qtedge::spectral
