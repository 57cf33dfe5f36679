// SPDX-License-Identifier: Apache-2.0
#include "marshak/spherical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "series_eval.hpp"

namespace marshak {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;

void check_x(double x, double x1, double x2) {
  if (x < x1 * (1.0 - 1e-12) - 1e-12 || x > x2 * (1.0 + 1e-12) + 1e-12) {
    throw std::invalid_argument("shell evaluation: x outside [x1, x2]");
  }
}

void check_tau(double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("shell evaluation: tau must be >= 0");
}

// Mode shape of the transformed field w = u*x:
// M(x; beta) = (2 - sqrt(3) X2) sin(beta(X2-x)) - 2 beta X2 cos(beta(X2-x)).
double shape(double beta, double x2, double x) {
  const double arg = beta * (x2 - x);
  return (2.0 - kSqrt3 * x2) * std::sin(arg) - 2.0 * beta * x2 * std::cos(arg);
}

double shape_dx(double beta, double x2, double x) {
  const double arg = beta * (x2 - x);
  return -beta * (2.0 - kSqrt3 * x2) * std::cos(arg) -
         2.0 * beta * beta * x2 * std::sin(arg);
}

// int_{X1}^{X2} x M(x; beta) dx in closed form.
double shape_moment(double beta, double x1, double x2) {
  const double d = x2 - x1;
  const double sd = std::sin(beta * d);
  const double cd = std::cos(beta * d);
  const double int_xsin = x2 * (1.0 - cd) / beta - sd / (beta * beta) + d * cd / beta;
  const double int_xcos = x2 * sd / beta - (cd - 1.0) / (beta * beta) - d * sd / beta;
  return (2.0 - kSqrt3 * x2) * int_xsin - 2.0 * beta * x2 * int_xcos;
}

// Steady solution coefficients u_inf = A/x + B.
void steady_coeffs(double x1, double x2, double& a, double& b) {
  const double den = 2.0 * x1 * x1 - kSqrt3 * x1 * x1 * x2 + kSqrt3 * x1 * x2 * x2 +
                     2.0 * x2 * x2;
  a = kSqrt3 * x1 * x1 * x2 * x2 / den;
  b = x1 * x1 * (2.0 - kSqrt3 * x2) / den;
}

template <typename Shape>
Fields accumulate(const SphericalSeries& series, double tau, Shape&& fn) {
  detail::CompensatedSum su, sv;
  double last_u = 0.0, last_v = 0.0;
  const auto& terms = series.terms();
  const size_t per_root = static_cast<size_t>(series.poles_per_root());
  const size_t first_of_last_root = terms.size() - per_root;
  for (size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const double n = fn(t);
    const double tu = t.weight_u * n * std::exp(t.s * tau);
    const double tv = t.weight_u * n * detail::material_phase(t.s, tau);
    su.add(tu);
    sv.add(tv);
    if (i >= first_of_last_root) {
      last_u += std::abs(tu);
      last_v += std::abs(tv);
    }
  }
  Fields out;
  out.u = su.value();
  out.v = sv.value();
  out.tol = 2.0 * std::max(last_u, last_v);
  return out;
}

}  // namespace

SphericalSeries SphericalSeries::build(const DimensionlessProblem& problem, int n_roots) {
  if (problem.geometry != Geometry::shell) {
    throw std::invalid_argument("SphericalSeries: problem must be a shell");
  }
  if (n_roots < 1) throw std::invalid_argument("SphericalSeries: n_roots must be >= 1");

  SphericalSeries s;
  s.problem_ = problem;
  s.roots_ = find_roots(problem, n_roots);
  s.poles_per_root_ = problem.eps == 0.0 ? 1 : 2;
  s.terms_.reserve(s.roots_.roots.size() * static_cast<size_t>(s.poles_per_root_));

  const double scale = kSqrt3 * problem.x1 * problem.x1;
  for (double beta : s.roots_.roots) {
    const PolePair pp = pole_pair(beta, problem.eps);
    const double denom_deriv = spherical_residual_deriv(beta, problem.x1, problem.x2);
    for (int k = 0; k < pp.n_poles; ++k) {
      const double denom = pp.s[k] * denom_deriv * pp.dbeta_ds[k];
      if (std::abs(denom) < 1e-300) {
        throw std::runtime_error("SphericalSeries: degenerate pole denominator");
      }
      SeriesTerm t;
      t.beta = beta;
      t.s = pp.s[k];
      t.weight_u = scale / denom;
      t.weight_v = t.weight_u / (pp.s[k] + 1.0);
      s.terms_.push_back(t);
    }
  }
  return s;
}

std::pair<double, double> steady_profile_shell(double x, double x1, double x2) {
  if (!(0.0 < x1 && x1 < x2)) {
    throw std::invalid_argument("steady_profile_shell: requires 0 < x1 < x2");
  }
  check_x(x, x1, x2);
  double a = 0.0, b = 0.0;
  steady_coeffs(x1, x2, a, b);
  const double value = a / x + b;
  return {value, value};
}

Fields evaluate_fields_shell(const SphericalSeries& series, double x, double tau) {
  const auto& pr = series.problem();
  check_x(x, pr.x1, pr.x2);
  check_tau(tau);
  Fields out = accumulate(series, tau,
                          [&](const SeriesTerm& t) { return shape(t.beta, pr.x2, x) / x; });
  const double steady = steady_profile_shell(x, pr.x1, pr.x2).first;
  out.u += steady;
  out.v += steady * -std::expm1(-tau);
  return out;
}

Gradients evaluate_gradients_shell(const SphericalSeries& series, double x, double tau) {
  const auto& pr = series.problem();
  check_x(x, pr.x1, pr.x2);
  check_tau(tau);
  const Fields acc = accumulate(series, tau, [&](const SeriesTerm& t) {
    return (shape_dx(t.beta, pr.x2, x) * x - shape(t.beta, pr.x2, x)) / (x * x);
  });
  double a = 0.0, b = 0.0;
  steady_coeffs(pr.x1, pr.x2, a, b);
  Gradients out;
  out.du_dx = acc.u - a / (x * x);
  out.dv_dx = acc.v - a / (x * x) * -std::expm1(-tau);
  out.tol = acc.tol;
  return out;
}

Currents leakage_currents_shell(const SphericalSeries& series, double tau) {
  const auto& pr = series.problem();
  const Fields u1 = evaluate_fields_shell(series, pr.x1, tau);
  const Fields u2 = evaluate_fields_shell(series, pr.x2, tau);
  const Gradients g1 = evaluate_gradients_shell(series, pr.x1, tau);
  const Gradients g2 = evaluate_gradients_shell(series, pr.x2, tau);
  Currents out;
  out.j_minus = u1.u + (2.0 / kSqrt3) * g1.du_dx;
  out.j_plus = u2.u - (2.0 / kSqrt3) * g2.du_dx;
  out.tol = std::max(u1.tol + (2.0 / kSqrt3) * g1.tol, u2.tol + (2.0 / kSqrt3) * g2.tol);
  return out;
}

ShellIntegrals integrated_densities_shell(const SphericalSeries& series, double tau) {
  check_tau(tau);
  const auto& pr = series.problem();
  const Fields acc = accumulate(series, tau, [&](const SeriesTerm& t) {
    return shape_moment(t.beta, pr.x1, pr.x2);
  });
  double a = 0.0, b = 0.0;
  steady_coeffs(pr.x1, pr.x2, a, b);
  const double x1sq = pr.x1 * pr.x1, x2sq = pr.x2 * pr.x2;
  const double steady_int = a * 0.5 * (x2sq - x1sq) +
                            b * (pr.x2 * x2sq - pr.x1 * x1sq) / 3.0;
  const double volume = 4.0 * kPi * (pr.x2 * x2sq - pr.x1 * x1sq) / 3.0;

  ShellIntegrals out;
  out.psi_r = 4.0 * kPi * (steady_int + acc.u);
  out.psi_m = 4.0 * kPi * (steady_int * -std::expm1(-tau) + acc.v);
  out.psi_r_avg = out.psi_r / volume;
  out.psi_m_avg = out.psi_m / volume;
  out.tol = 4.0 * kPi * acc.tol;
  return out;
}

double energy_balance_residual_shell(const SphericalSeries& series, double tau) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("energy_balance_residual_shell: tau must be > 0");
  }
  const auto& pr = series.problem();
  const double eps = pr.eps;

  detail::CompensatedSum lhs;
  for (const auto& t : series.terms()) {
    const double moment = shape_moment(t.beta, pr.x1, pr.x2);
    const double factor = eps + 1.0 / (t.s + 1.0);
    lhs.add(factor * t.s * t.weight_u * moment * std::exp(t.s * tau));
  }

  const Gradients g1 = evaluate_gradients_shell(series, pr.x1, tau);
  const Gradients g2 = evaluate_gradients_shell(series, pr.x2, tau);
  const double rhs = pr.x2 * pr.x2 * g2.du_dx - pr.x1 * pr.x1 * g1.du_dx;
  return 4.0 * kPi * lhs.value() - 4.0 * kPi * rhs;
}

FieldSnapshot evaluate_snapshot_shell(const SphericalSeries& series,
                                      const std::vector<double>& xs, double tau) {
  FieldSnapshot snap;
  snap.tau = tau;
  snap.x = xs;
  snap.u.reserve(xs.size());
  snap.v.reserve(xs.size());
  snap.du_dx.reserve(xs.size());
  snap.dv_dx.reserve(xs.size());
  snap.tol.reserve(xs.size());
  for (double x : xs) {
    const Fields f = evaluate_fields_shell(series, x, tau);
    const Gradients g = evaluate_gradients_shell(series, x, tau);
    snap.u.push_back(f.u);
    snap.v.push_back(f.v);
    snap.du_dx.push_back(g.du_dx);
    snap.dv_dx.push_back(g.dv_dx);
    snap.tol.push_back(std::max(f.tol, g.tol));
  }
  return snap;
}

}  // namespace marshak
