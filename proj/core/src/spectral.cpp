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

#include "qtedge/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "qtedge/errors.hpp"
#include "qtedge/quadrature.hpp"

namespace qtedge::spectral {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInvPi = 1.0 / std::numbers::pi;  // Int_R dOmega/2pi of an even f

quadrature::Options spectral_options() { return {1e-8, 1e-14, 200000}; }

void require_gamma(double gamma_norm) {
  if (!(gamma_norm > 0.0) || !std::isfinite(gamma_norm)) {
    throw DomainError("Gamma must be finite and > 0");
  }
}

void require_below(double g, double gamma_norm, const char* what) {
  require_gamma(gamma_norm);
  if (!(g > 0.0) || !std::isfinite(g)) throw DomainError(std::string(what) + ": g must be > 0");
  if (classify(g, gamma_norm) != Regime::kBelowThreshold) {
    std::ostringstream msg;
    msg << what << ": g = " << g << " is not below threshold g_th = "
        << threshold_g(gamma_norm)
        << "; the frequency-domain analysis no longer applies";
    throw DomainError(msg.str());
  }
}

double denominator(double omega, double g, double gamma_norm) {
  const double u = 1.0 / (g * g) - 1.0;
  const double g2 = gamma_norm * gamma_norm;
  const double shifted = omega * omega - (u - 0.25 * g2);
  return shifted * shifted + u * g2;
}

// Breakpoints that resolve the spectral peak of V at the scale of its width.
void add_peak_breakpoints(double g, double gamma_norm, std::vector<double>& out) {
  const double g2 = gamma_norm * gamma_norm;
  const double u = 1.0 / (g * g) - 1.0;
  const double c = u - 0.25 * g2;
  double center = 0.0;
  double width = 0.0;
  if (c > 0.0) {
    center = std::sqrt(c);
    const double dmin = u * g2;
    width = std::min(std::sqrt(dmin) / (2.0 * center), std::pow(dmin, 0.25));
    out.push_back(center);
  } else {
    const double dmin = std::pow(0.25 * g2 + u, 2);
    const double curvature = 2.0 * (0.25 * g2 - u);
    width = std::pow(dmin, 0.25);
    if (curvature > 0.0) width = std::min(width, std::sqrt(dmin / curvature));
  }
  width = std::max(width, 1e-300);
  const double reach = 10.0 * std::max({1.0, center, gamma_norm});
  for (double w = width * 0.0625; w < reach; w *= 4.0) {
    out.push_back(center + w);
    if (center - w > 0.0) out.push_back(center - w);
  }
}

std::vector<double> peak_breakpoints(double g, double gamma_norm) {
  std::vector<double> pts;
  add_peak_breakpoints(g, gamma_norm, pts);
  return pts;
}

}  // namespace

double SpectralParams::g() const { return 2.0 * std::abs(lam) / omega_m; }

double SpectralParams::gamma_norm() const { return gamma / (2.0 * std::abs(lam)); }

bool SpectralParams::quantum_limited() const { return s_in == 0.5 && s_prime == 0.5; }

void SpectralParams::validate() const {
  if (!(gamma > 0.0)) throw DomainError("gamma must be > 0");
  if (!(lam != 0.0) || !std::isfinite(lam)) throw DomainError("lambda must be finite and nonzero");
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  if (!(omega_m > 0.0)) throw DomainError("omega_m must be > 0");
  if (!(s_in >= 0.0) || !(s_prime >= 0.0)) throw DomainError("noise powers must be >= 0");
}

SpectralParams SpectralParams::from_normalized(double g, double gamma_norm, double lam,
                                               double t) {
  SpectralParams p;
  p.lam = lam;
  p.omega_m = 2.0 * std::abs(lam) / g;
  p.gamma = 2.0 * std::abs(lam) * gamma_norm;
  p.t = t;
  return p;
}

double threshold_g(double gamma_norm) {
  const double x = 1.0 - 0.25 * gamma_norm * gamma_norm;
  return x > 0.0 ? 1.0 / std::sqrt(x) : kInf;
}

Regime classify(double g, double gamma_norm) {
  const double gth = threshold_g(gamma_norm);
  if (std::isfinite(gth) && std::abs(g - gth) <= 1e-12 * gth) return Regime::kAtThreshold;
  return g < gth ? Regime::kBelowThreshold : Regime::kAboveThreshold;
}

double idler_gain(double omega, double g, double gamma_norm) {
  const double d = denominator(omega, g, gamma_norm);
  if (!(d > 0.0)) return kInf;
  return gamma_norm * gamma_norm / d;
}

double idler_gain_dg(double omega, double g, double gamma_norm) {
  const double g2 = gamma_norm * gamma_norm;
  const double u = 1.0 / (g * g) - 1.0;
  const double d = denominator(omega, g, gamma_norm);
  if (!(d > 0.0)) return kInf;
  const double dd_du = -2.0 * (omega * omega - u + 0.25 * g2) + g2;
  const double dv_du = -g2 * dd_du / (d * d);
  const double du_dg = -2.0 / (g * g * g);
  return dv_du * du_dg;
}

double output_spectrum(double omega, const SpectralParams& params) {
  params.validate();
  if (classify(params.g(), params.gamma_norm()) == Regime::kAboveThreshold) {
    throw DomainError("output spectrum is only defined at or below threshold");
  }
  const double v = idler_gain(omega, params.g(), params.gamma_norm());
  if (std::isinf(v)) return kInf;
  return (1.0 + 2.0 * v) * params.s_in + params.s_prime;
}

double bhattacharyya_distance(double g, double g_prime, double gamma_norm, double lam,
                              double t, NoisePowers noise) {
  require_below(g, gamma_norm, "bhattacharyya_distance");
  require_below(g_prime, gamma_norm, "bhattacharyya_distance");
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  if (g == g_prime) return 0.0;

  auto spectrum = [&](double omega, double gg) {
    return (1.0 + 2.0 * idler_gain(omega, gg, gamma_norm)) * noise.s_in + noise.s_prime;
  };
  auto integrand = [&](double omega) {
    const double sa = spectrum(omega, g);
    const double sb = spectrum(omega, g_prime);
    const double ra = std::sqrt(sa);
    const double rb = std::sqrt(sb);
    // ln[(Sa + Sb) / (2 sqrt(Sa Sb))] = log1p((ra - rb)^2 / (2 ra rb))
    return std::log1p((ra - rb) * (ra - rb) / (2.0 * ra * rb));
  };
  std::vector<double> pts = peak_breakpoints(g, gamma_norm);
  add_peak_breakpoints(g_prime, gamma_norm, pts);
  const auto r = quadrature::integrate_half_line(integrand, pts, spectral_options());
  return 2.0 * std::abs(lam) * t * kInvPi * r.value;
}

double normalized_fisher_threshold(double gamma_norm) {
  require_gamma(gamma_norm);
  const double g2 = gamma_norm * gamma_norm;
  auto integrand = [g2](double x) {
    const double x2 = x * x;
    const double a = x2 + 1.0;
    const double b = 1.0 + g2 * x2 * a;
    return 1.0 / (a * a * b * b);
  };
  const std::vector<double> pts = {1.0, 1.0 / std::sqrt(gamma_norm)};
  return 16.0 * kInvPi * quadrature::integrate_half_line(integrand, pts, spectral_options()).value;
}

double normalized_fisher(double g, double gamma_norm, NoisePowers noise) {
  require_gamma(gamma_norm);
  const Regime regime = classify(g, gamma_norm);
  if (regime == Regime::kAtThreshold) {
    if (noise.s_in != 0.5 || noise.s_prime != 0.5) {
      throw DomainError("threshold Fisher formula assumes quantum-limited noise");
    }
    return normalized_fisher_threshold(gamma_norm);
  }
  require_below(g, gamma_norm, "fisher_information");
  auto integrand = [&](double omega) {
    const double v = idler_gain(omega, g, gamma_norm);
    const double s = (1.0 + 2.0 * v) * noise.s_in + noise.s_prime;
    const double ratio = 2.0 * noise.s_in * idler_gain_dg(omega, g, gamma_norm) / s;
    return ratio * ratio;
  };
  const auto r = quadrature::integrate_half_line(integrand, peak_breakpoints(g, gamma_norm),
                                                 spectral_options());
  return std::pow(g, 6) * std::pow(gamma_norm, 3) * kInvPi * r.value;
}

double normalized_fisher_gain_form(double g, double gamma_norm) {
  require_below(g, gamma_norm, "fisher_information_gain_form");
  const double c = 1.0 / (g * g) - 1.0 + 0.25 * gamma_norm * gamma_norm;
  auto integrand = [&](double omega) {
    const double v = idler_gain(omega, g, gamma_norm);
    const double shifted = omega * omega - c;
    const double v2 = v * v;
    const double vp1 = v + 1.0;
    return shifted * shifted * v2 * v2 / (vp1 * vp1);
  };
  const auto r = quadrature::integrate_half_line(integrand, peak_breakpoints(g, gamma_norm),
                                                 spectral_options());
  return 16.0 / gamma_norm * kInvPi * r.value;
}

namespace {

double denormalize(const SpectralParams& p, double normalized) {
  return normalized * p.omega_m * p.omega_m * p.t / (p.gamma * p.gamma * p.gamma);
}

}  // namespace

double fisher_information(const SpectralParams& params) {
  params.validate();
  return denormalize(params, normalized_fisher(params.g(), params.gamma_norm(),
                                               {params.s_in, params.s_prime}));
}

double fisher_information_gain_form(const SpectralParams& params) {
  params.validate();
  if (!params.quantum_limited()) {
    throw DomainError("gain-form Fisher integral assumes quantum-limited noise");
  }
  return denormalize(params, normalized_fisher_gain_form(params.g(), params.gamma_norm()));
}

double fisher_threshold(const SpectralParams& params) {
  params.validate();
  return denormalize(params, normalized_fisher_threshold(params.gamma_norm()));
}

double fisher_from_bhattacharyya(const SpectralParams& params, double rel_step) {
  params.validate();
  if (!(rel_step > 0.0)) throw DomainError("rel_step must be > 0");
  const double g = params.g();
  const double gn = params.gamma_norm();
  const NoisePowers noise{params.s_in, params.s_prime};
  auto second = [&](double h) {
    const double up = bhattacharyya_distance(g, g + h, gn, params.lam, params.t, noise);
    const double down = bhattacharyya_distance(g, g - h, gn, params.lam, params.t, noise);
    return (up + down) / (h * h);
  };
  const double h = rel_step * g;
  const double d2 = (4.0 * second(0.5 * h) - second(h)) / 3.0;
  const double dg_domega = -g / params.omega_m;
  return 4.0 * dg_domega * dg_domega * d2;
}

std::vector<SweepPoint> fisher_sweep(double gamma_norm, const std::vector<double>& g_grid,
                                     NoisePowers noise, unsigned threads) {
  std::vector<SweepPoint> out(g_grid.size());
  auto evaluate = [&](std::size_t i) {
    SweepPoint& p = out[i];
    p.g = g_grid[i];
    try {
      p.normalized_fisher = normalized_fisher(p.g, gamma_norm, noise);
    } catch (const std::exception& e) {
      p.ok = false;
      p.normalized_fisher = std::numeric_limits<double>::quiet_NaN();
      p.error = e.what();
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(g_grid.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < g_grid.size(); ++i) evaluate(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < g_grid.size(); i = next++) evaluate(i);
    });
  }
  return out;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 1) throw DomainError("grid needs at least one point");
  if (!(lo > 0.0) || !(hi > 0.0)) throw DomainError("log grid requires positive bounds");
  std::vector<double> grid(static_cast<std::size_t>(n));
  if (n == 1) {
    grid[0] = lo;
    return grid;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) grid[i] = std::exp(a + (b - a) * i / (n - 1));
  grid.back() = hi;
  grid.front() = lo;
  return grid;
}

}  // namespace qtedge::spectral
