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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "emit.hpp"
#include "qtedge/bosonic.hpp"
#include "qtedge/detection.hpp"
#include "qtedge/fock.hpp"
#include "qtedge/ising.hpp"
#include "qtedge/spectral.hpp"
#include "run.hpp"

namespace {

using namespace qtedge;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

Outcome c1_helstrom_oracle() {
  double worst = 0.0;
  for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    for (double p0 : {0.1, 0.3, 0.5}) {
      const auto prior = BinaryHypothesis::from_p0(p0);
      const double a = oracle::optimal_qubit_discrimination(Fidelity(f), prior);
      const double b = helstrom_min_error(Fidelity(f), prior);
      worst = std::max(worst, std::abs(a - b));
    }
  }
  return {worst <= 1e-6, fmt("max|dPe|=%.3e (tol 1e-6)", worst)};
}

Outcome c2_ising_bruteforce() {
  double worst_shifted = 0.0, worst_integer = 0.0;
  const std::vector<double> times = {0.3, 1.0};
  for (int n : {8, 10}) {
    for (auto [g0, g1] : {std::pair{0.5, 0.6}, {0.9, 1.1}, {1.5, 1.6}}) {
      ising::IsingParams p;
      p.n_sites = n;
      p.g0 = g0;
      p.g1 = g1;
      const auto dense = oracle::spin_chain_fidelity_series(p, times);
      for (std::size_t i = 0; i < times.size(); ++i) {
        p.t = times[i];
        p.grid = ising::MomentumGrid::kHalfShifted;
        const double shifted = ising::ising_fidelity_exact(p).value();
        p.grid = ising::MomentumGrid::kInteger;
        const double integer = ising::ising_fidelity_exact(p).value();
        worst_shifted = std::max(worst_shifted, std::abs(shifted - dense[i].fidelity.value()));
        worst_integer = std::max(worst_integer, std::abs(integer - dense[i].fidelity.value()));
      }
    }
  }
  return {worst_shifted <= 1e-8,
          fmt("half-shifted max|dF|=%.3e (tol 1e-8); integer grid max|dF|=%.3e", worst_shifted,
              worst_integer)};
}

Outcome c3_ising_limit() {
  const std::int64_t n = std::int64_t{1} << 20;
  const double delta = 1e-3, t = 0.05;
  double worst = 0.0;
  for (double g1 : {1.2, 0.8}) {
    ising::IsingParams p;
    p.n_sites = n;
    p.g0 = g1 - delta;
    p.g1 = g1;
    p.t = t;
    const double exact = ising::ising_log_fidelity_exact(p);
    const double asym = ising::ising_log_fidelity_asymptotic(n, 1.0, g1, delta, t);
    worst = std::max(worst, std::abs(exact / asym - 1.0));
  }
  ising::IsingParams a;
  a.n_sites = n;
  a.g0 = 1.2 - delta;
  a.g1 = 1.2;
  a.t = t;
  auto b = a;
  b.n_sites = 4 * n;
  b.t = t / 2;
  const double scaling =
      std::abs(ising::ising_log_fidelity_exact(b) / ising::ising_log_fidelity_exact(a) - 1.0);
  return {worst <= 0.05 && scaling <= 0.05,
          fmt("max rel err vs asymptote=%.3e, 4N/(t/2) invariance rel err=%.3e (tol 5e-2)", worst,
              scaling)};
}

Outcome c4_opo_exact() {
  double worst_fock = 0.0, worst_engine = 0.0;
  for (double g0 : {0.6, 0.8}) {
    for (double g1 : {1.1, 1.25}) {
      for (double lt : {0.5, 1.0, 1.5}) {
        const auto p = bosonic::OpoParams::from_criticality(g0, g1, lt / (g1 / 2));
        const double exact = bosonic::opo_fidelity_exact(p).value();
        const double fock = oracle::fock_opo_fidelity(p, 200).fidelity.value();
        const double engine = bosonic::opo_fidelity_engine(p).value();
        worst_fock = std::max(worst_fock, std::abs(exact - fock));
        worst_engine = std::max(worst_engine, std::abs(exact - engine));
      }
    }
  }
  return {worst_fock <= 1e-6 && worst_engine <= 1e-10,
          fmt("max|dF| fock=%.3e (tol 1e-6), engine=%.3e (tol 1e-10)", worst_fock, worst_engine)};
}

Outcome c5_worst_case() {
  const double delta = 1e-3, lambda1 = 0.5;
  const double g0 = 1 - delta / 2, g1 = 1 + delta / 2, omega = 2 * lambda1 / g1;
  double worst = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double t = (2.0 * i / 200) / lambda1;
    const auto p = bosonic::OpoParams::from_criticality(g0, g1, t, omega);
    const double exact = bosonic::opo_fidelity_exact(p).value();
    const double sech = bosonic::opo_fidelity_worst_case(lambda1, delta, t).value();
    worst = std::max(worst, std::abs(exact / sech - 1.0));
  }
  const double t5 = 5.0 / (2 * lambda1 * std::sqrt(delta));
  const auto p = bosonic::OpoParams::from_criticality(g0, g1, t5, omega);
  const double exponent = bosonic::opo_fidelity_exact(p).log_decay();
  const double asym_err = std::abs(exponent - (5.0 - std::log(2.0)));
  // lambda' = lambda1 sqrt(1 - g1^-2) sits below lambda1 sqrt(delta) by a
  // relative 3 delta / 8, which shifts the exponent by about 5 * 3 delta / 8.
  const double lambda_shift = 5.0 * (1.0 - std::sqrt(1.0 - 1.0 / (g1 * g1)) / std::sqrt(delta));
  const double sech_err =
      std::abs(bosonic::opo_fidelity_worst_case(lambda1, delta, t5).log_decay() -
               (5.0 - std::log(2.0)));
  return {worst <= 0.01 && asym_err <= 1e-3,
          fmt("max rel dev from sech=%.3e (tol 1e-2); exact |exponent-(5-ln2)|=%.3e (tol 1e-3; "
              "lambda' shift predicts %.3e); sech-form asymptote err=%.1e",
              worst, asym_err, lambda_shift, sech_err)};
}

Outcome c6_receiver() {
  double worst = 0.0;
  bool zero_false_alarm = true;
  const auto prior = BinaryHypothesis::from_p0(0.3);
  for (double g0 : {0.6, 0.8}) {
    for (double lt : {0.5, 1.0}) {
      const auto p = bosonic::OpoParams::from_criticality(g0, 1.25, lt / 0.625);
      const auto r = bosonic::kennedy_receiver(p, prior);
      zero_false_alarm = zero_false_alarm && r.p10 == 0.0;
      // The H_1 evolution grows a long photon tail; longer times need a wider window.
      const int n_max = lt <= 0.5 ? 40 : 120;
      const auto stats = oracle::opo_photon_statistics(p, n_max, lt <= 0.5 ? 200 : 600);
      worst = std::max(worst, std::abs(r.p01 - stats.probabilities[0]));
    }
  }
  const auto deep = bosonic::OpoParams::from_criticality(0.6, 1.25, 25.0);
  const auto r = bosonic::kennedy_receiver(deep, prior);
  const Fidelity f = bosonic::opo_fidelity_exact(deep);
  const double gap = optimal_error_exponent(f, prior).value - r.error_exponent;
  const double gap_err = std::abs(gap + std::log(prior.p0()));
  return {zero_false_alarm && worst <= 1e-6 && f.value() <= 1e-6 && gap_err <= 1e-3,
          fmt("P10==0: %.0f, max|P01-P(0)|=%.3e (tol 1e-6), F=%.2e, |gap+ln p0|=%.3e (tol 1e-3)",
              zero_false_alarm ? 1.0 : 0.0, worst, f.value(), gap_err)};
}

Outcome c7_multimode() {
  const Fidelity target(0.5);
  const auto a = bosonic::opo_multimode(1000, 0.5, 1e-7, 1.0, target);
  const auto b = bosonic::opo_multimode(2000, 0.5, 1e-7, 1.0, target);
  const double ratio_err = std::abs(b.detectable_perturbation / a.detectable_perturbation - 0.5);
  double worst = 0.0;
  for (double delta : {1e-6, 1e-5, 1e-4}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const auto m = bosonic::opo_multimode(1000, 0.5, delta, t, target);
      if (m.outside_validity_window) continue;
      worst = std::max(worst, std::abs(m.product_log_decay / m.log_decay - 1.0));
    }
  }
  return {ratio_err <= 1e-6 && worst <= 5e-3,
          fmt("|ratio-0.5|=%.3e (tol 1e-6), max rel product-vs-exp=%.3e (tol 5e-3)", ratio_err,
              worst)};
}

Outcome c8_dicke() {
  const auto p = bosonic::DickeParams::from_criticality(0.9, 1.1, 0.0);
  std::vector<double> times;
  for (int i = 1; i <= 8; ++i) times.push_back(0.25 * i);
  const auto fock = oracle::fock_dicke_fidelity_series(p, times, 30);
  double worst = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    auto q = p;
    q.t = times[i];
    worst = std::max(worst, std::abs(bosonic::dicke_fidelity(q).fidelity -
                                     fock[i].fidelity.value()));
  }

  // Envelope and decay rate close to threshold.
  const double g0 = 0.995, g1 = 1.005, delta = g1 - g0, omega = 1.0;
  const double scale = omega * std::sqrt(delta);
  double max_envelope = 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int i = 1; i <= 600; ++i) {
    const double x = 6.0 * i / 600;
    const auto d = bosonic::dicke_fidelity(bosonic::DickeParams::from_criticality(g0, g1, x / scale));
    max_envelope = std::max(max_envelope, d.plus_factor);
    if (x >= 3.0) {
      const double y = -std::log(d.fidelity);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const bool a_ok = worst <= 1e-6;
  const bool b_ok = max_envelope <= 1.0;
  const bool c_ok = std::abs(slope - 1.0) <= 0.05;
  std::string detail = fmt("a: max|dF|=%.3e (tol 1e-6); b: max F*cosh=%.4f (need <=1); "
               "c: slope/(omega sqrt(delta))=%.4f (need 1 +- 0.05; sqrt(1/2)=0.7071)",
               worst, max_envelope, slope);
  detail += std::string(" [a ") + (a_ok ? "ok" : "fail") + ", b " + (b_ok ? "ok" : "fail") +
            ", c " + (c_ok ? "ok" : "fail") + "]";
  return {a_ok && b_ok && c_ok, detail};
}

Outcome c9_fisher_threshold() {
  const double small = spectral::normalized_fisher_threshold(1e-3);
  const double two = spectral::normalized_fisher_threshold(2.0);
  bool inside = true;
  double lo = 4.0, hi = 0.0;
  for (double gamma : {0.1, 0.5, 1.0, 1.9}) {
    const double v = spectral::normalized_fisher_threshold(gamma);
    inside = inside && v > 1.532 && v < 4.0;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {small > 3.99 && small <= 4.0 && std::abs(two - 1.532) <= 0.002 && inside,
          fmt("G(1e-3)=%.7f, G(2)=%.5f, interior range [%.4f, %.4f]", small, two, lo, hi)};
}

Outcome c10_fisher_consistency() {
  double worst = 0.0;
  for (double g : {0.3, 0.6, 0.9}) {
    for (double gamma : {0.05, 0.2, 1.0}) {
      const double a = spectral::normalized_fisher(g, gamma);
      const double b = spectral::normalized_fisher_gain_form(g, gamma);
      worst = std::max(worst, std::abs(a / b - 1.0));
    }
  }
  const auto p = spectral::SpectralParams::from_normalized(0.6, 0.2);
  const double bh =
      std::abs(spectral::fisher_from_bhattacharyya(p) / spectral::fisher_information(p) - 1.0);
  return {worst <= 1e-6 && bh <= 1e-4,
          fmt("forms max rel=%.3e (tol 1e-6), Bhattacharyya rel=%.3e (tol 1e-4)", worst, bh)};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome c11_figure() {
  using namespace qtedge::cli;
  const auto dir = std::filesystem::temp_directory_path() / "qtedge_acceptance";
  std::filesystem::create_directories(dir);
  std::string csv[2], svg[2];
  for (int i = 0; i < 2; ++i) {
    RunConfig c;
    c.model = Model::kFisher;
    c.command = "sweep";
    c.parameters = resolve_parameters(schema(c.model, c.command), {}, {});
    c.threads = i == 0 ? 1 : 4;
    c.log_x = c.log_y = true;
    c.csv_path = (dir / ("fig1_" + std::to_string(i) + ".csv")).string();
    c.svg_path = (dir / ("fig1_" + std::to_string(i) + ".svg")).string();
    std::ostringstream out, err;
    if (run(c, out, err) != kExitOk) return {false, "sweep failed: " + err.str()};
    csv[i] = slurp(c.csv_path);
    svg[i] = slurp(c.svg_path);
  }
  std::filesystem::remove_all(dir);
  const Table t = parse_csv(csv[0]);
  bool monotone = t.rows.size() == 200;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    monotone = monotone && t.rows[i][1] > t.rows[i - 1][1];
  }
  const double ratio = t.rows.back()[1] / t.rows.front()[1];
  const bool deterministic = csv[0] == csv[1] && svg[0] == svg[1];
  return {monotone && ratio > 1e3 && deterministic,
          fmt("rows=%.0f monotone=%.0f enhancement=%.3e (need >1e3) byte-identical=%.0f",
              static_cast<double>(t.rows.size()), monotone ? 1.0 : 0.0, ratio,
              deterministic ? 1.0 : 0.0)};
}

Outcome c12_detection_algebra() {
  StandardModelParams sm;
  sm.n_copies = 50;
  sm.var_q = 0.7;
  sm.t = 1.3;
  const double qfi = quantum_fisher_information([&](double d) {
    auto q = sm;
    q.delta = d;
    return standard_fidelity(q).value();
  });
  const double expected = 4.0 * 50 * 0.7 * 1.3 * 1.3;
  const double qfi_err = std::abs(qfi / expected - 1.0);
  double worst = 0.0;
  for (double f : {1e-8, 0.01, 0.3, 0.9, 0.999}) {
    for (double p0 : {0.2, 0.5}) {
      const auto prior = BinaryHypothesis::from_p0(p0);
      const double pe = helstrom_min_error(Fidelity(f), prior);
      worst = std::max(worst, std::abs(fidelity_for_target_error(pe, prior).value() - f));
    }
  }
  return {qfi_err <= 1e-3 && worst <= 1e-10,
          fmt("QFI rel err=%.3e (tol 1e-3), round-trip max|dF|=%.3e (tol 1e-10)", qfi_err, worst)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {"C1", "helstrom-oracle", c1_helstrom_oracle},
      {"C2", "ising-exact-vs-dense", c2_ising_bruteforce},
      {"C3", "ising-thermodynamic-limit", c3_ising_limit},
      {"C4", "opo-exact-formula", c4_opo_exact},
      {"C5", "opo-worst-case-sech", c5_worst_case},
      {"C6", "photon-counting-receiver", c6_receiver},
      {"C7", "multimode-scaling", c7_multimode},
      {"C8", "dicke", c8_dicke},
      {"C9", "fisher-threshold-bounds", c9_fisher_threshold},
      {"C10", "fisher-consistency", c10_fisher_consistency},
      {"C11", "fisher-sweep-figure", c11_figure},
      {"C12", "detection-algebra", c12_detection_algebra},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  %-4s %-28s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
