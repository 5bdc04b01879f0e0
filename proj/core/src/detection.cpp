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

#include "qtedge/detection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtedge/errors.hpp"

namespace qtedge {
namespace {

constexpr double kClampSlack = 1e-12;

double checked_eval(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw DomainError("fidelity function returned a non-finite value at delta=" +
                      std::to_string(x));
  }
  return v;
}

}  // namespace

Fidelity::Fidelity(double value) : value_(value) {
  if (!(value >= -kClampSlack && value <= 1.0 + kClampSlack)) {
    throw DomainError("fidelity must lie in [0, 1], got " + std::to_string(value));
  }
  value_ = std::clamp(value, 0.0, 1.0);
}

double Fidelity::log_decay() const {
  if (value_ == 0.0) return std::numeric_limits<double>::infinity();
  return -std::log(value_);
}

BinaryHypothesis::BinaryHypothesis(double p0, double p1) : p0_(p0), p1_(p1) {
  if (!(p0 >= 0.0) || !(p1 >= 0.0) || std::abs(p0 + p1 - 1.0) > 1e-12) {
    throw DomainError("priors must be non-negative and sum to 1");
  }
}

void StandardModelParams::validate() const {
  if (n_copies < 1) throw DomainError("n_copies must be >= 1");
  if (!(var_q >= 0.0)) throw DomainError("var_q must be >= 0");
  if (!(t >= 0.0)) throw DomainError("t must be >= 0");
  if (!std::isfinite(delta)) throw DomainError("delta must be finite");
}

double helstrom_min_error(Fidelity fidelity, const BinaryHypothesis& prior) {
  double disc = 1.0 - 4.0 * prior.p0() * prior.p1() * fidelity.value();
  if (disc < -kClampSlack || disc > 1.0 + kClampSlack) {
    throw DomainError("Helstrom discriminant outside [0, 1]: " + std::to_string(disc));
  }
  disc = std::clamp(disc, 0.0, 1.0);
  // 1 - sqrt(disc) cancels badly for tiny p0 p1 F; use the conjugate form.
  const double x = 4.0 * prior.p0() * prior.p1() * fidelity.value();
  return 0.5 * x / (1.0 + std::sqrt(disc));
}

ErrorExponent optimal_error_exponent(Fidelity fidelity,
                                     const BinaryHypothesis& prior) {
  const double pe = helstrom_min_error(fidelity, prior);
  if (pe == 0.0) {
    return {std::numeric_limits<double>::infinity(), true};
  }
  return {-std::log(pe), false};
}

double asymptotic_error_exponent(Fidelity fidelity,
                                 const BinaryHypothesis& prior) {
  return -std::log(prior.p0()) - std::log(prior.p1()) + fidelity.log_decay();
}

Fidelity standard_fidelity(const StandardModelParams& params) {
  params.validate();
  const double exponent = static_cast<double>(params.n_copies) * params.var_q *
                          params.delta * params.delta * params.t * params.t;
  return Fidelity(std::exp(-exponent));
}

double standard_detectable_perturbation(Fidelity target, std::int64_t n_copies,
                                        double dq, double t) {
  if (!(target.value() > 0.0 && target.value() < 1.0)) {
    throw DomainError("target fidelity must lie in (0, 1)");
  }
  if (n_copies < 1) throw DomainError("n_copies must be >= 1");
  if (!(t > 0.0) || !(dq > 0.0)) {
    throw DomainError("perturbation is undetectable for t = 0 or dq = 0");
  }
  return std::sqrt(target.log_decay()) /
         (std::sqrt(static_cast<double>(n_copies)) * dq * t);
}

Fidelity fidelity_for_target_error(double target_error,
                                   const BinaryHypothesis& prior) {
  const double reachable = std::min(prior.p0(), prior.p1());
  if (!(target_error > 0.0)) throw DomainError("target error must be > 0");
  if (target_error > reachable * (1.0 + 1e-12)) {
    throw DomainError("target error " + std::to_string(target_error) +
                      " exceeds min(p0, p1) = " + std::to_string(reachable));
  }
  const double f = target_error * (1.0 - target_error) / (prior.p0() * prior.p1());
  return Fidelity(std::min(f, 1.0));
}

double quantum_fisher_information(const std::function<double(double)>& fidelity_fn,
                                  double step) {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be > 0");
  const double f0 = checked_eval(fidelity_fn, 0.0);
  if (std::abs(f0 - 1.0) > 1e-9) {
    throw DomainError("fidelity family is not null-matched: F(0) = " +
                      std::to_string(f0));
  }
  auto second_difference = [&](double h) {
    return (checked_eval(fidelity_fn, h) - 2.0 * f0 + checked_eval(fidelity_fn, -h)) /
           (h * h);
  };
  const double coarse = second_difference(step);
  const double fine = second_difference(0.5 * step);
  return -2.0 * (4.0 * fine - coarse) / 3.0;
}

Eigen::MatrixXd quantum_fisher_matrix(
    const std::function<double(const Eigen::VectorXd&)>& fidelity_fn, int dim,
    double step) {
  if (dim < 1) throw DomainError("perturbation dimension must be >= 1");
  if (!(step > 0.0)) throw DomainError("finite-difference step must be > 0");
  auto eval = [&](const Eigen::VectorXd& d) {
    const double v = fidelity_fn(d);
    if (!std::isfinite(v)) throw DomainError("fidelity function returned a non-finite value");
    return v;
  };
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(dim);
  const double f0 = eval(zero);
  if (std::abs(f0 - 1.0) > 1e-9) {
    throw DomainError("fidelity family is not null-matched: F(0) = " +
                      std::to_string(f0));
  }

  auto hessian = [&](double h) {
    Eigen::MatrixXd out(dim, dim);
    for (int j = 0; j < dim; ++j) {
      Eigen::VectorXd ej = zero;
      ej(j) = h;
      out(j, j) = (eval(ej) - 2.0 * f0 + eval(-ej)) / (h * h);
      for (int k = 0; k < j; ++k) {
        Eigen::VectorXd ek = zero;
        ek(k) = h;
        const double mixed =
            (eval(ej + ek) - eval(ej - ek) - eval(-ej + ek) + eval(-ej - ek)) /
            (4.0 * h * h);
        out(j, k) = mixed;
        out(k, j) = mixed;
      }
    }
    return out;
  };
  return -2.0 * (4.0 * hessian(0.5 * step) - hessian(step)) / 3.0;
}

}  // namespace qtedge
