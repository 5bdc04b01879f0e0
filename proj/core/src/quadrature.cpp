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

#include "qtedge/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

#include "qtedge/errors.hpp"

namespace qtedge::quadrature {
namespace {

// 15-point Kronrod abscissae on [0, 1] half of [-1, 1]; odd indices are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a;
  double b;
  double value;
  double error;
  double roundoff;  ///< error floor set by cancellation in the rule itself
  bool splittable;

  bool operator<(const Interval& other) const { return error < other.error; }
};

Interval gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double pair = f1[j] + f2[j];
    kronrod += kWgk[j] * pair;
    abs_sum += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }

  const double value = kronrod * half;
  asc *= std::abs(half);
  abs_sum *= std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && error != 0.0) {
    error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double roundoff = 0.0;
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps)) {
    roundoff = 50.0 * eps * abs_sum;
    error = std::max(roundoff, error);
  }
  if (!std::isfinite(value) || !std::isfinite(error)) {
    std::ostringstream msg;
    msg << "quadrature: integrand is not finite on [" << a << ", " << b << "]";
    throw ConvergenceError(msg.str(), std::numeric_limits<double>::infinity());
  }
  const double width_floor = 100.0 * eps * std::max(std::abs(a), std::abs(b));
  const bool splittable = (b - a) > width_floor &&
                          (b - a) > 1e4 * std::numeric_limits<double>::min() &&
                          error > roundoff;
  return {a, b, value, error, roundoff, splittable};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, std::vector<double> breakpoints,
                 const Options& options) {
  if (breakpoints.size() < 2) {
    throw DomainError("quadrature: need at least two breakpoints");
  }
  for (double x : breakpoints) {
    if (!std::isfinite(x)) throw DomainError("quadrature: breakpoints must be finite");
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  std::priority_queue<Interval> queue;
  Result result;
  double total = 0.0;
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const Interval piece = gauss_kronrod(f, breakpoints[i], breakpoints[i + 1]);
    total += piece.value;
    total_error += piece.error;
    queue.push(piece);
    result.evaluations += 15;
  }

  std::vector<Interval> frozen;
  auto target = [&] { return std::max(options.abs_tol, options.rel_tol * std::abs(total)); };
  while (total_error > target() && !queue.empty()) {
    if (static_cast<int>(queue.size() + frozen.size()) >= options.max_intervals) break;
    const Interval worst = queue.top();
    queue.pop();
    if (!worst.splittable) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Interval left = gauss_kronrod(f, worst.a, mid);
    const Interval right = gauss_kronrod(f, mid, worst.b);
    result.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum to shed the drift of the incremental updates.
  total = 0.0;
  total_error = 0.0;
  double roundoff = 0.0;
  result.intervals = static_cast<int>(queue.size() + frozen.size());
  while (!queue.empty()) {
    frozen.push_back(queue.top());
    queue.pop();
  }
  for (const auto& piece : frozen) {
    total += piece.value;
    total_error += piece.error;
    roundoff += piece.roundoff;
  }
  result.value = total;
  result.error = total_error;
  // An estimate made only of rounding floors cannot be improved by splitting.
  if (total_error > target() && total_error > roundoff * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "quadrature did not converge: error estimate " << total_error
        << " exceeds target " << target() << " after " << result.intervals
        << " intervals";
    throw ConvergenceError(msg.str(), total_error);
  }
  return result;
}

Result integrate_half_line(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints, const Options& options) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  std::vector<double> mapped = {0.0, kHalfPi};
  for (double x : breakpoints) {
    if (x > 0.0 && std::isfinite(x)) mapped.push_back(std::atan(x));
  }
  auto g = [&f](double u) {
    const double c = std::cos(u);
    if (c <= 0.0) return 0.0;
    const double x = std::tan(u);
    const double v = f(x);
    return v == 0.0 ? 0.0 : v / (c * c);
  };
  return integrate(g, std::move(mapped), options);
}

}  // namespace qtedge::quadrature
