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

#include "qtedge/ising.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qtedge/errors.hpp"

namespace qtedge::ising {
namespace {

constexpr std::int64_t kLogSpaceThreshold = 10000;

BlochMode make_mode(std::int64_t k, const IsingParams& params) {
  BlochMode mode;
  mode.k = k;
  mode.phi = momentum(k, params.n_sites, params.grid);
  const double s = std::sin(mode.phi);
  const double c = std::cos(mode.phi);
  mode.epsilon1 = 2.0 * params.coupling *
                  std::sqrt(std::max(0.0, 1.0 + params.g1 * params.g1 - 2.0 * params.g1 * c));
  // atan2 keeps g_m = cos(phi) regular.
  mode.theta0 = std::atan2(s, params.g0 - c);
  mode.theta1 = std::atan2(s, params.g1 - c);
  return mode;
}

}  // namespace

void IsingParams::validate() const {
  if (n_sites < 2 || n_sites % 2 != 0) {
    throw DomainError("n_sites must be even and >= 2, got " + std::to_string(n_sites));
  }
  if (!(coupling > 0.0)) throw DomainError("coupling J must be > 0");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be finite and >= 0");
  if (!std::isfinite(g0) || !std::isfinite(g1)) throw DomainError("fields must be finite");
}

double momentum(std::int64_t k, std::int64_t n_sites, MomentumGrid grid) {
  const double shift = grid == MomentumGrid::kHalfShifted ? 0.5 : 0.0;
  return 2.0 * std::numbers::pi * (static_cast<double>(k) - shift) /
         static_cast<double>(n_sites);
}

BlochMode bloch_mode(std::int64_t k, const IsingParams& params) {
  params.validate();
  if (k < 1 || k > params.n_sites / 2) {
    throw DomainError("mode index must lie in 1..N/2, got " + std::to_string(k));
  }
  return make_mode(k, params);
}

double mode_factor(const BlochMode& mode, double t) {
  const double a = std::sin(mode.epsilon1 * t);
  const double b = std::sin(mode.theta1 - mode.theta0);
  return 1.0 - (a * a) * (b * b);
}

double ising_log_fidelity_exact(const IsingParams& params) {
  params.validate();
  const std::int64_t half = params.n_sites / 2;
  double sum = 0.0;
  for (std::int64_t k = 1; k <= half; ++k) {
    const BlochMode mode = make_mode(k, params);
    const double a = std::sin(mode.epsilon1 * params.t);
    const double b = std::sin(mode.theta1 - mode.theta0);
    sum -= std::log1p(-(a * a) * (b * b));
  }
  return sum;
}

Fidelity ising_fidelity_exact(const IsingParams& params) {
  params.validate();
  if (params.n_sites > kLogSpaceThreshold) {
    return Fidelity(std::exp(-ising_log_fidelity_exact(params)));
  }
  double product = 1.0;
  for (std::int64_t k = 1; k <= params.n_sites / 2; ++k) {
    product *= mode_factor(make_mode(k, params), params.t);
  }
  return Fidelity(product);
}

double ising_log_fidelity_asymptotic(double n_sites, double coupling, double g1,
                                     double delta, double t) {
  if (!(n_sites > 0.0) || !(coupling > 0.0)) throw DomainError("n_sites and coupling must be > 0");
  if (!(t >= 0.0) || !std::isfinite(delta)) throw DomainError("need t >= 0 and finite delta");
  const double base = n_sites * coupling * coupling * delta * delta * t * t;
  return g1 > 1.0 ? base / (g1 * g1) : base;
}

double ising_time_for_target_fidelity(Fidelity target, double n_sites,
                                      double coupling, double delta, double g1) {
  if (!(target.value() > 0.0 && target.value() < 1.0)) {
    throw DomainError("target fidelity must lie in (0, 1)");
  }
  if (delta == 0.0) throw DomainError("delta = 0: the target is never reached");
  if (!(n_sites > 0.0) || !(coupling > 0.0)) {
    throw DomainError("n_sites and coupling must be > 0");
  }
  const double scale = g1 > 1.0 ? g1 : 1.0;
  return std::sqrt(target.log_decay()) /
         (std::sqrt(n_sites) * coupling * std::abs(delta)) * scale;
}

}  // namespace qtedge::ising
