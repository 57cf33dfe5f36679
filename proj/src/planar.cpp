// SPDX-License-Identifier: Apache-2.0
#include "marshak/planar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "series_eval.hpp"

namespace marshak {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

void check_x(double x, double b) {
  if (x < -1e-12 || x > b * (1.0 + 1e-12) + 1e-12) {
    throw std::invalid_argument("planar evaluation: x outside [0, b]");
  }
}

void check_tau(double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("planar evaluation: tau must be >= 0");
}

// Mode shape N(x; beta) = 3 sin(beta(b-x)) + 2 sqrt(3) beta cos(beta(b-x)).
double shape(double beta, double b, double x) {
  const double arg = beta * (b - x);
  return 3.0 * std::sin(arg) + 2.0 * kSqrt3 * beta * std::cos(arg);
}

double shape_dx(double beta, double b, double x) {
  const double arg = beta * (b - x);
  return -3.0 * beta * std::cos(arg) + 2.0 * kSqrt3 * beta * beta * std::sin(arg);
}

// Closed-form int_0^b N dx = 3(1 - cos(beta b))/beta + 2 sqrt(3) sin(beta b).
double shape_integral(double beta, double b) {
  return 3.0 * (1.0 - std::cos(beta * b)) / beta + 2.0 * kSqrt3 * std::sin(beta * b);
}

// Generic series accumulation: fn(term) -> spatial factor for that mode.
template <typename Shape>
Fields accumulate(const PlanarSeries& series, double tau, Shape&& fn) {
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

PlanarSeries PlanarSeries::build(const DimensionlessProblem& problem, int n_roots) {
  if (problem.geometry != Geometry::slab) {
    throw std::invalid_argument("PlanarSeries: problem must be a slab");
  }
  if (n_roots < 1) throw std::invalid_argument("PlanarSeries: n_roots must be >= 1");

  PlanarSeries s;
  s.problem_ = problem;
  s.roots_ = find_roots(problem, n_roots);
  s.poles_per_root_ = problem.eps == 0.0 ? 1 : 2;
  s.terms_.reserve(s.roots_.roots.size() * static_cast<size_t>(s.poles_per_root_));

  for (double beta : s.roots_.roots) {
    const PolePair pp = pole_pair(beta, problem.eps);
    const double denom_deriv = planar_residual_deriv(beta, problem.b);
    for (int k = 0; k < pp.n_poles; ++k) {
      const double denom = pp.s[k] * denom_deriv * pp.dbeta_ds[k];
      if (std::abs(denom) < 1e-300) {
        throw std::runtime_error("PlanarSeries: degenerate pole denominator");
      }
      SeriesTerm t;
      t.beta = beta;
      t.s = pp.s[k];
      t.weight_u = 1.0 / denom;
      t.weight_v = t.weight_u / (pp.s[k] + 1.0);
      s.terms_.push_back(t);
    }
  }
  return s;
}

std::pair<double, double> steady_profile(double x, double b) {
  check_x(x, b);
  const double value = (3.0 * b + 2.0 * kSqrt3 - 3.0 * x) / (3.0 * b + 4.0 * kSqrt3);
  return {value, value};
}

Fields evaluate_fields(const PlanarSeries& series, double x, double tau) {
  const double b = series.problem().b;
  check_x(x, b);
  check_tau(tau);
  Fields out = accumulate(series, tau,
                          [&](const SeriesTerm& t) { return shape(t.beta, b, x); });
  const double steady = steady_profile(x, b).first;
  out.u += steady;
  out.v += steady * -std::expm1(-tau);
  return out;
}

Gradients evaluate_gradients(const PlanarSeries& series, double x, double tau) {
  const double b = series.problem().b;
  check_x(x, b);
  check_tau(tau);
  const Fields acc = accumulate(
      series, tau, [&](const SeriesTerm& t) { return shape_dx(t.beta, b, x); });
  const double steady_slope = -3.0 / (3.0 * b + 4.0 * kSqrt3);
  Gradients out;
  out.du_dx = acc.u + steady_slope;
  out.dv_dx = acc.v + steady_slope * -std::expm1(-tau);
  out.tol = acc.tol;
  return out;
}

Currents leakage_currents(const PlanarSeries& series, double tau) {
  const double b = series.problem().b;
  const Fields u0 = evaluate_fields(series, 0.0, tau);
  const Fields ub = evaluate_fields(series, b, tau);
  const Gradients g0 = evaluate_gradients(series, 0.0, tau);
  const Gradients gb = evaluate_gradients(series, b, tau);
  Currents out;
  out.j_minus = u0.u + (2.0 / kSqrt3) * g0.du_dx;
  out.j_plus = ub.u - (2.0 / kSqrt3) * gb.du_dx;
  out.tol = std::max(u0.tol + (2.0 / kSqrt3) * g0.tol, ub.tol + (2.0 / kSqrt3) * gb.tol);
  return out;
}

PlanarIntegrals integrated_densities(const PlanarSeries& series, double tau) {
  check_tau(tau);
  const double b = series.problem().b;
  const Fields acc = accumulate(
      series, tau, [&](const SeriesTerm& t) { return shape_integral(t.beta, b); });
  // The steady profile integrates to b/2 exactly.
  PlanarIntegrals out;
  out.psi_r = acc.u + 0.5 * b;
  out.psi_m = acc.v + 0.5 * b * -std::expm1(-tau);
  out.tol = acc.tol;
  return out;
}

double energy_balance_residual(const PlanarSeries& series, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("energy_balance_residual: tau must be > 0");
  const double b = series.problem().b;
  const double eps = series.problem().eps;

  // eps * d(psi_r)/dtau + d(psi_m)/dtau, term-by-term time derivatives.
  detail::CompensatedSum lhs;
  for (const auto& t : series.terms()) {
    const double integral = shape_integral(t.beta, b);
    const double factor = eps + 1.0 / (t.s + 1.0);
    lhs.add(factor * t.s * t.weight_u * integral * std::exp(t.s * tau));
  }

  const Gradients g0 = evaluate_gradients(series, 0.0, tau);
  const Gradients gb = evaluate_gradients(series, b, tau);
  return lhs.value() - (gb.du_dx - g0.du_dx);
}

double eps0_initial_profile(double x, double b) {
  check_x(x, b);
  return (3.0 * std::sinh(b - x) + 2.0 * kSqrt3 * std::cosh(b - x)) /
         (7.0 * std::sinh(b) + 4.0 * kSqrt3 * std::cosh(b));
}

FieldSnapshot evaluate_snapshot(const PlanarSeries& series,
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
    const Fields f = evaluate_fields(series, x, tau);
    const Gradients g = evaluate_gradients(series, x, tau);
    snap.u.push_back(f.u);
    snap.v.push_back(f.v);
    snap.du_dx.push_back(g.du_dx);
    snap.dv_dx.push_back(g.dv_dx);
    snap.tol.push_back(std::max(f.tol, g.tol));
  }
  return snap;
}

}  // namespace marshak
