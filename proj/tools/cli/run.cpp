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

#include "run.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include "qtedge/bosonic.hpp"
#include "qtedge/detection.hpp"
#include "qtedge/errors.hpp"
#include "qtedge/fock.hpp"
#include "qtedge/ising.hpp"
#include "qtedge/spectral.hpp"

namespace qtedge::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void paired(Row& row, const std::string& name, double analytic, double oracle) {
  row.emplace_back(name + "_oracle", oracle);
  row.emplace_back(name + "_abs_diff", std::abs(analytic - oracle));
}

std::int64_t as_int(double x) { return static_cast<std::int64_t>(std::llround(x)); }

ising::IsingParams ising_params(const Params& p) {
  ising::IsingParams ip;
  ip.n_sites = as_int(p.at("n"));
  ip.coupling = p.at("j");
  ip.g0 = p.at("g0");
  ip.g1 = p.at("g1");
  ip.t = p.at("t");
  ip.grid = p.at("grid") == 0.0 ? ising::MomentumGrid::kInteger : ising::MomentumGrid::kHalfShifted;
  return ip;
}

bosonic::OpoParams opo_params(const Params& p) {
  return {p.at("omega0"), p.at("omega1"), 0.5 * p.at("g0") * p.at("omega0"),
          0.5 * p.at("g1") * p.at("omega1"), p.at("t")};
}

bosonic::DickeParams dicke_params(const Params& p) {
  return {p.at("omega0"), p.at("omega1"), 0.5 * p.at("g0") * p.at("omega0"),
          0.5 * p.at("g1") * p.at("omega1"), p.at("t")};
}

Row helstrom(const Params& p, bool oracle) {
  const Fidelity f(p.at("fidelity"));
  const auto prior = BinaryHypothesis::from_p0(p.at("p0"));
  const double pe = helstrom_min_error(f, prior);
  Row row{{"min_error", pe},
          {"error_exponent", optimal_error_exponent(f, prior).value},
          {"asymptotic_exponent", asymptotic_error_exponent(f, prior)}};
  row.emplace_back("round_trip_fidelity",
                   pe > 0.0 ? fidelity_for_target_error(pe, prior).value() : kNaN);
  if (oracle) paired(row, "min_error", pe, oracle::optimal_qubit_discrimination(f, prior));
  return row;
}

Row standard_qfi(const Params& p, bool) {
  StandardModelParams sm;
  sm.n_copies = as_int(p.at("n"));
  sm.var_q = p.at("var-q");
  sm.t = p.at("t");
  sm.validate();
  const double qfi = quantum_fisher_information(
      [sm](double d) {
        auto q = sm;
        q.delta = d;
        return standard_fidelity(q).value();
      },
      p.at("step"));
  const double expected = 4.0 * static_cast<double>(sm.n_copies) * sm.var_q * sm.t * sm.t;
  return {{"qfi", qfi}, {"qfi_closed_form", expected}, {"rel_diff", std::abs(qfi / expected - 1.0)}};
}

Row standard_detectable(const Params& p, bool) {
  const double dq = std::sqrt(p.at("var-q"));
  return {{"detectable_perturbation",
           standard_detectable_perturbation(Fidelity(p.at("fidelity")), as_int(p.at("n")), dq,
                                            p.at("t"))}};
}

Row ising_exact(const Params& p, bool oracle) {
  const auto ip = ising_params(p);
  const double log_decay = ising::ising_log_fidelity_exact(ip);
  const double f = std::exp(-log_decay);
  Row row{{"fidelity", f}, {"log_decay", log_decay}};
  if (oracle) {
    const auto bf = oracle::spin_chain_fidelity_bruteforce(ip);
    paired(row, "fidelity", f, bf.fidelity.value());
    row.emplace_back("oracle_gap", bf.gap);
  }
  return row;
}

Row ising_asymptotic(const Params& p, bool oracle) {
  const double n = p.at("n");
  const double value = ising::ising_log_fidelity_asymptotic(n, p.at("j"), p.at("g1"),
                                                            p.at("delta"), p.at("t"));
  Row row{{"log_decay", value}, {"fidelity", std::exp(-value)}};
  if (oracle) {
    ising::IsingParams ip;
    ip.n_sites = as_int(n);
    ip.coupling = p.at("j");
    ip.g1 = p.at("g1");
    ip.g0 = ip.g1 - p.at("delta");
    ip.t = p.at("t");
    ip.grid = ising::MomentumGrid::kHalfShifted;
    paired(row, "log_decay", value, ising::ising_log_fidelity_exact(ip));
  }
  return row;
}

Row ising_time_for_f(const Params& p, bool oracle) {
  const double n = p.at("n");
  const Fidelity target(p.at("fidelity"));
  const double t =
      ising::ising_time_for_target_fidelity(target, n, p.at("j"), p.at("delta"), p.at("g1"));
  Row row{{"t", t}};
  if (oracle) {
    ising::IsingParams ip;
    ip.n_sites = as_int(n);
    ip.coupling = p.at("j");
    ip.g1 = p.at("g1");
    ip.g0 = ip.g1 - p.at("delta");
    ip.t = t;
    ip.grid = ising::MomentumGrid::kHalfShifted;
    paired(row, "fidelity_at_t", target.value(), ising::ising_fidelity_exact(ip).value());
  }
  return row;
}

Row opo_fidelity(const Params& p, bool oracle) {
  const auto op = opo_params(p);
  const double f = bosonic::opo_fidelity_exact(op).value();
  const double engine = bosonic::opo_fidelity_engine(op).value();
  Row row{{"fidelity", f},
          {"log_decay", -std::log(f)},
          {"fidelity_engine", engine},
          {"engine_abs_diff", std::abs(f - engine)}};
  if (oracle) {
    const auto fock = oracle::fock_opo_fidelity(op, static_cast<int>(p.at("truncation")));
    paired(row, "fidelity", f, fock.fidelity.value());
    row.emplace_back("oracle_truncation", fock.truncation);
  }
  return row;
}

Row opo_worst_case(const Params& p, bool oracle) {
  const double lambda1 = p.at("lambda1");
  const double delta = p.at("delta");
  const double t = p.at("t");
  const auto f = bosonic::opo_fidelity_worst_case(lambda1, delta, t);
  const double x = 2.0 * lambda1 * std::sqrt(delta) * t;
  Row row{{"fidelity", f.value()},
          {"log_decay", f.log_decay()},
          {"asymptotic_log_decay", x - std::log(2.0)}};
  if (oracle) {
    // Symmetric straddle of threshold with equal detunings.
    const double g1 = 1.0 + 0.5 * delta;
    const double omega = 2.0 * lambda1 / g1;
    const auto op = bosonic::OpoParams::from_criticality(1.0 - 0.5 * delta, g1, t, omega);
    paired(row, "fidelity", f.value(), bosonic::opo_fidelity_exact(op).value());
  }
  return row;
}

Row opo_multimode(const Params& p, bool) {
  const auto r = bosonic::opo_multimode(as_int(p.at("n-modes")), p.at("lambda1"),
                                        p.at("delta"), p.at("t"), Fidelity(p.at("fidelity")));
  return {{"fidelity", r.fidelity},
          {"log_decay", r.log_decay},
          {"detectable_perturbation", r.detectable_perturbation},
          {"product_fidelity", r.product_fidelity},
          {"product_log_decay", r.product_log_decay},
          {"outside_validity_window", r.outside_validity_window ? 1.0 : 0.0}};
}

Row opo_receiver(const Params& p, bool oracle) {
  const auto op = opo_params(p);
  const auto prior = BinaryHypothesis::from_p0(p.at("p0"));
  const auto r = bosonic::kennedy_receiver(op, prior);
  const auto best = optimal_error_exponent(bosonic::opo_fidelity_exact(op), prior);
  Row row{{"p10", r.p10},
          {"p01", r.p01},
          {"error_probability", r.error_probability},
          {"error_exponent", r.error_exponent},
          {"optimal_exponent", best.value},
          {"exponent_gap", best.value - r.error_exponent}};
  if (oracle) {
    const auto stats = oracle::opo_photon_statistics(op, static_cast<int>(p.at("n-max")),
                                                     static_cast<int>(p.at("truncation")));
    paired(row, "p01", r.p01, stats.probabilities.front());
    row.emplace_back("oracle_leakage", stats.leakage);
  }
  return row;
}

Row dicke_fidelity(const Params& p, bool oracle) {
  const auto dp = dicke_params(p);
  const auto r = bosonic::dicke_fidelity(dp);
  Row row{{"fidelity", r.fidelity},
          {"log_decay", -std::log(r.fidelity)},
          {"plus_factor", r.plus_factor},
          {"envelope_rate", dp.omega1 * std::sqrt(std::max(dp.delta(), 0.0))},
          {"unstable_rate", r.unstable_rate}};
  if (oracle) {
    const auto fock = oracle::fock_dicke_fidelity(dp, static_cast<int>(p.at("truncation")));
    paired(row, "fidelity", r.fidelity, fock.fidelity.value());
    row.emplace_back("oracle_truncation", fock.truncation);
  }
  return row;
}

Row fisher_threshold(const Params& p, bool) {
  const double gn = p.at("gamma-norm");
  return {{"g_threshold", spectral::threshold_g(gn)},
          {"normalized_fisher", spectral::normalized_fisher_threshold(gn)}};
}

Row fisher_point(const Params& p, bool oracle) {
  const double g = p.at("g");
  const double gn = p.at("gamma-norm");
  const spectral::NoisePowers noise{p.at("s-in"), p.at("s-prime")};
  const double direct = spectral::normalized_fisher(g, gn, noise);
  Row row{{"normalized_fisher", direct}};
  if (noise.s_in == 0.5 && noise.s_prime == 0.5 &&
      spectral::classify(g, gn) == spectral::Regime::kBelowThreshold) {
    row.emplace_back("normalized_fisher_gain_form", spectral::normalized_fisher_gain_form(g, gn));
  }
  if (oracle) {
    auto sp = spectral::SpectralParams::from_normalized(g, gn);
    sp.s_in = noise.s_in;
    sp.s_prime = noise.s_prime;
    const double scale = sp.gamma * sp.gamma * sp.gamma / (sp.omega_m * sp.omega_m * sp.t);
    paired(row, "normalized_fisher", direct,
           scale * spectral::fisher_from_bhattacharyya(sp, p.at("step")));
  }
  return row;
}

Row oracle_compare(const Params&, bool) {
  Row row;
  auto add = [&](const std::string& name, double analytic, double oracle) {
    row.emplace_back(name, analytic);
    paired(row, name, analytic, oracle);
  };
  {
    const Fidelity f(0.5);
    const auto prior = BinaryHypothesis::equal();
    add("helstrom", helstrom_min_error(f, prior), oracle::optimal_qubit_discrimination(f, prior));
  }
  {
    ising::IsingParams ip;
    ip.g0 = 0.9;
    ip.g1 = 1.1;
    ip.t = 0.5;
    const double bf = oracle::spin_chain_fidelity_bruteforce(ip).fidelity.value();
    add("ising_integer_grid", ising::ising_fidelity_exact(ip).value(), bf);
    ip.grid = ising::MomentumGrid::kHalfShifted;
    add("ising_half_shifted", ising::ising_fidelity_exact(ip).value(), bf);
  }
  {
    const auto op = bosonic::OpoParams::from_criticality(0.8, 1.25, 1.0);
    add("opo", bosonic::opo_fidelity_exact(op).value(),
        oracle::fock_opo_fidelity(op).fidelity.value());
    add("opo_p01", bosonic::kennedy_receiver(op, BinaryHypothesis::equal()).p01,
        oracle::opo_photon_statistics(op, 40).probabilities.front());
  }
  {
    const auto dp = bosonic::DickeParams::from_criticality(0.9, 1.1, 2.0);
    add("dicke", bosonic::dicke_fidelity(dp).fidelity,
        oracle::fock_dicke_fidelity(dp).fidelity.value());
  }
  return row;
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

Table fisher_sweep_table(const RunConfig& config, std::ostream& err, int& warnings) {
  const auto& p = config.parameters;
  const double gn = p.at("gamma-norm");
  double g_max = p.at("g-max");
  if (g_max == 0.0) {
    const double gth = spectral::threshold_g(gn);
    if (!std::isfinite(gth)) throw DomainError("no threshold for Gamma >= 2; set --g-max");
    g_max = 0.9999 * gth;
  }
  SweepSpec spec{"g", p.at("g-min"), g_max, static_cast<int>(p.at("points")),
                 p.at("scale") == 0.0 ? Scale::kLog : Scale::kLinear};
  const auto grid = spec.values();
  const auto points =
      spectral::fisher_sweep(gn, grid, {p.at("s-in"), p.at("s-prime")}, config.threads);
  Table t;
  t.columns = {"g", "normalized_fisher"};
  for (std::size_t i = 0; i < points.size(); ++i) {
    t.rows.push_back({points[i].g, points[i].normalized_fisher});
    if (!points[i].ok) {
      ++warnings;
      err << "warning: g = " << points[i].g << ": " << points[i].error << '\n';
    }
  }
  return t;
}

std::string status_of(const std::exception& e) {
  if (dynamic_cast<const ConvergenceError*>(&e)) return "nonconvergent";
  return "invalid";
}

}  // namespace

Row evaluate(Model model, const std::string& command, const Params& p, bool oracle_check) {
  switch (model) {
    case Model::kHelstrom: return helstrom(p, oracle_check);
    case Model::kStandard:
      if (command == "qfi") return standard_qfi(p, oracle_check);
      if (command == "detectable") return standard_detectable(p, oracle_check);
      break;
    case Model::kIsing:
      if (command == "exact") return ising_exact(p, oracle_check);
      if (command == "asymptotic") return ising_asymptotic(p, oracle_check);
      if (command == "time-for-f") return ising_time_for_f(p, oracle_check);
      break;
    case Model::kOpo:
      if (command == "fidelity") return opo_fidelity(p, oracle_check);
      if (command == "worst-case") return opo_worst_case(p, oracle_check);
      if (command == "multimode") return opo_multimode(p, oracle_check);
      if (command == "receiver") return opo_receiver(p, oracle_check);
      break;
    case Model::kDicke:
      if (command == "fidelity") return dicke_fidelity(p, oracle_check);
      break;
    case Model::kFisher:
      if (command == "threshold") return fisher_threshold(p, oracle_check);
      if (command == "point") return fisher_point(p, oracle_check);
      break;
    case Model::kOracle:
      if (command == "compare") return oracle_compare(p, oracle_check);
      break;
  }
  throw DomainError(std::string("no scalar evaluation for ") + model_name(model) + " " + command);
}

Table build_table(const RunConfig& config, std::ostream& err, int& warnings) {
  warnings = 0;
  if (config.model == Model::kFisher && config.command == "sweep") {
    if (config.sweep) throw DomainError("fisher sweep takes its grid from --g-min/--g-max/--points");
    return fisher_sweep_table(config, err, warnings);
  }
  const auto& params = schema(config.model, config.command);
  if (!config.sweep) {
    const Row row = evaluate(config.model, config.command, config.parameters, config.oracle_check);
    Table t;
    for (const auto& [name, value] : row) {
      t.columns.push_back(name);
    }
    t.rows.emplace_back();
    for (const auto& [name, value] : row) t.rows.back().push_back(value);
    return t;
  }

  const SweepSpec& spec = *config.sweep;
  bool known = false;
  for (const auto& s : params) {
    if (s.name == spec.variable && s.choices.empty()) known = true;
  }
  if (!known) throw DomainError("cannot sweep '" + spec.variable + "' for this command");
  const auto values = spec.values();
  std::vector<Row> rows(values.size());
  std::vector<std::string> status(values.size(), "ok");
  std::vector<std::string> messages(values.size());
  parallel_for(values.size(), config.threads, [&](std::size_t i) {
    Params p = config.parameters;
    p[spec.variable] = values[i];
    try {
      rows[i] = evaluate(config.model, config.command, p, config.oracle_check);
    } catch (const std::exception& e) {
      status[i] = status_of(e);
      messages[i] = e.what();
    }
  });

  Table t;
  t.columns.push_back(spec.variable);
  for (const auto& row : rows) {
    for (const auto& [name, value] : row) {
      if (std::find(t.columns.begin(), t.columns.end(), name) == t.columns.end()) {
        t.columns.push_back(name);
      }
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::vector<double> line(t.columns.size(), kNaN);
    line[0] = values[i];
    for (const auto& [name, value] : rows[i]) line[t.column(name)] = value;
    t.rows.push_back(std::move(line));
    if (status[i] != "ok") {
      ++warnings;
      err << "warning: " << spec.variable << " = " << values[i] << ": " << messages[i] << '\n';
    }
  }
  t.status = std::move(status);
  return t;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    int warnings = 0;
    const Table table = build_table(config, err, warnings);
    const bool is_table = table.rows.size() != 1 || config.sweep ||
                          (config.model == Model::kFisher && config.command == "sweep");
    if (!config.csv_path.empty()) write_file(config.csv_path, to_csv(table));
    if (!config.svg_path.empty()) {
      const std::string x = table.columns.at(0);
      const std::string y = table.columns.size() > 1 ? table.columns.at(1) : x;
      const auto chart = render_svg_line_chart(table, x, y, config.log_x, config.log_y);
      if (chart.skipped > 0) {
        err << "warning: " << chart.skipped << " non-plottable rows skipped in SVG\n";
      }
      write_file(config.svg_path, chart.svg);
    }
    if (is_table) {
      if (config.csv_path.empty()) out << to_csv(table);
      else out << table.rows.size() << " rows written to " << config.csv_path << '\n';
    } else {
      char buf[64];
      for (std::size_t j = 0; j < table.columns.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.12g", table.rows[0][j]);
        out << table.columns[j] << " = " << buf << '\n';
      }
    }
    if (config.oracle_check && !is_table) {
      for (std::size_t j = 0; j < table.columns.size(); ++j) {
        const auto& c = table.columns[j];
        if (c.size() > 9 && c.compare(c.size() - 9, 9, "_abs_diff") == 0 &&
            c != "engine_abs_diff" && table.rows[0][j] > config.oracle_tolerance) {
          ++warnings;
          err << "warning: " << c << " exceeds tolerance " << config.oracle_tolerance << '\n';
        }
      }
    }
    if (warnings > 0) err << warnings << " warning(s)\n";
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: missing parameter (" << e.what() << ")\n";
    return kExitInvalidInput;
  }
}

}  // namespace qtedge::cli
