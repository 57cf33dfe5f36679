// SPDX-License-Identifier: Apache-2.0
#include "marshak/verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "marshak/planar.hpp"
#include "marshak/spherical.hpp"

namespace marshak {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

double laplace_u_slab(double x, double s, double b, double eps) {
  const double bsq = beta_squared(s, eps);
  if (bsq >= 0.0) {
    const double beta = std::sqrt(bsq);
    const double num = 3.0 * std::sin(beta * (b - x)) +
                       2.0 * kSqrt3 * beta * std::cos(beta * (b - x));
    const double den = (3.0 - 4.0 * bsq) * std::sin(beta * b) +
                       4.0 * kSqrt3 * beta * std::cos(beta * b);
    return num / (s * den);
  }
  // Hyperbolic branch, written with nonpositive exponents only so large
  // |beta^2| (small tau abscissae) cannot overflow.
  const double mu = std::sqrt(-bsq);
  const double num = (3.0 + 2.0 * kSqrt3 * mu) * std::exp(-mu * x) +
                     (2.0 * kSqrt3 * mu - 3.0) * std::exp(-mu * (2.0 * b - x));
  const double e2 = std::exp(-2.0 * mu * b);
  const double den = (3.0 + 4.0 * mu * mu) * (1.0 - e2) +
                     4.0 * kSqrt3 * mu * (1.0 + e2);
  return num / (s * den);
}

double laplace_u_shell(double x, double s, double x1, double x2, double eps) {
  const double bsq = beta_squared(s, eps);
  const double d = x2 - x1;
  const double scale = kSqrt3 * x1 * x1;
  if (bsq >= 0.0) {
    const double beta = std::sqrt(bsq);
    const double num = (2.0 - kSqrt3 * x2) * std::sin(beta * (x2 - x)) -
                       2.0 * beta * x2 * std::cos(beta * (x2 - x));
    const double den = ((4.0 * bsq - 3.0) * x1 * x2 - 2.0 * kSqrt3 * d + 4.0) *
                           std::sin(beta * d) -
                       (4.0 * kSqrt3 * beta * x1 * x2 + 4.0 * beta * d) *
                           std::cos(beta * d);
    return scale * num / (s * x * den);
  }
  const double mu = std::sqrt(-bsq);
  const double num = (2.0 - kSqrt3 * x2 - 2.0 * mu * x2) * std::exp(-mu * (x - x1)) -
                     (2.0 - kSqrt3 * x2 + 2.0 * mu * x2) * std::exp(-mu * (d + x2 - x));
  const double e2 = std::exp(-2.0 * mu * d);
  const double den = -((4.0 * mu * mu + 3.0) * x1 * x2 + 2.0 * kSqrt3 * d - 4.0) *
                         (1.0 - e2) -
                     mu * (4.0 * d + 4.0 * kSqrt3 * x1 * x2) * (1.0 + e2);
  return scale * num / (s * x * den);
}

}  // namespace

double laplace_space_u(double x, double s, const DimensionlessProblem& problem) {
  if (s == 0.0) throw std::invalid_argument("laplace_space_u: s = 0 is the steady pole");
  if (problem.geometry == Geometry::slab) {
    return laplace_u_slab(x, s, problem.b, problem.eps);
  }
  return laplace_u_shell(x, s, problem.x1, problem.x2, problem.eps);
}

double laplace_space_v(double x, double s, const DimensionlessProblem& problem) {
  return laplace_space_u(x, s, problem) / (s + 1.0);
}

double stehfest_invert(const std::function<double(double)>& fbar, double tau, int terms) {
  if (!(tau > 0.0)) throw std::invalid_argument("stehfest_invert: tau must be > 0");
  if (terms < 10 || terms > 18 || terms % 2 != 0) {
    throw std::invalid_argument("stehfest_invert: terms must be even, in [10, 18]");
  }

  const int m = terms / 2;
  long double fact[19];
  fact[0] = 1.0L;
  for (int i = 1; i <= 18; ++i) fact[i] = fact[i - 1] * i;

  const long double ln2_over_tau = std::numbers::ln2_v<long double> / static_cast<long double>(tau);
  long double acc = 0.0L;
  for (int k = 1; k <= terms; ++k) {
    long double w = 0.0L;
    const int j_lo = (k + 1) / 2;
    const int j_hi = std::min(k, m);
    for (int j = j_lo; j <= j_hi; ++j) {
      const long double num = std::pow(static_cast<long double>(j), m) * fact[2 * j];
      const long double den =
          fact[m - j] * fact[j] * fact[j - 1] * fact[k - j] * fact[2 * j - k];
      w += num / den;
    }
    if ((k + m) % 2 != 0) w = -w;
    acc += w * static_cast<long double>(fbar(static_cast<double>(k * ln2_over_tau)));
  }
  return static_cast<double>(ln2_over_tau * acc);
}

InversionResult invert_numerically(double x, double tau,
                                   const DimensionlessProblem& problem, int terms) {
  auto ubar = [&](double s) { return laplace_space_u(x, s, problem); };
  auto vbar = [&](double s) { return laplace_space_v(x, s, problem); };

  InversionResult out;
  out.u = stehfest_invert(ubar, tau, terms);
  out.v = stehfest_invert(vbar, tau, terms);
  const int alt = terms == 10 ? 12 : terms - 2;
  out.u_spread = std::abs(out.u - stehfest_invert(ubar, tau, alt));
  out.v_spread = std::abs(out.v - stehfest_invert(vbar, tau, alt));
  return out;
}

ComparisonReport compare(const FieldSnapshot& a, const FieldSnapshot& b,
                         double tolerance) {
  if (a.x.size() != b.x.size()) {
    throw std::invalid_argument("compare: snapshot grids differ in size");
  }
  if (std::abs(a.tau - b.tau) > 1e-9 * (1.0 + std::abs(a.tau))) {
    throw std::invalid_argument("compare: snapshots are at different times");
  }
  for (size_t i = 0; i < a.x.size(); ++i) {
    if (std::abs(a.x[i] - b.x[i]) > 1e-9 * (1.0 + std::abs(a.x[i]))) {
      throw std::invalid_argument("compare: snapshot grids do not coincide");
    }
  }

  ComparisonReport rep;
  rep.tolerance = tolerance;
  double abs_sum = 0.0, rel_sum = 0.0;
  auto add_point = [&](double x, double tau, char field, double va, double vb) {
    PointError pe;
    pe.x = x;
    pe.tau = tau;
    pe.field = field;
    pe.abs_err = std::abs(va - vb);
    pe.rel_err = pe.abs_err / std::max({std::abs(va), std::abs(vb), 1e-12});
    rep.points.push_back(pe);
    rep.max_abs_error = std::max(rep.max_abs_error, pe.abs_err);
    rep.max_rel_error = std::max(rep.max_rel_error, pe.rel_err);
    abs_sum += pe.abs_err;
    rel_sum += pe.rel_err;
  };
  for (size_t i = 0; i < a.x.size(); ++i) {
    add_point(a.x[i], a.tau, 'u', a.u[i], b.u[i]);
    add_point(a.x[i], a.tau, 'v', a.v[i], b.v[i]);
  }
  rep.mean_abs_error = abs_sum / static_cast<double>(rep.points.size());
  rep.mean_rel_error = rel_sum / static_cast<double>(rep.points.size());
  rep.pass = rep.max_rel_error <= tolerance;
  return rep;
}

std::vector<ConvergencePoint> convergence_study(const DimensionlessProblem& problem,
                                                double probe_x, double probe_tau,
                                                int max_modes) {
  if (max_modes < 6) throw std::invalid_argument("convergence_study: max_modes must be >= 6");

  const int n_roots = max_modes - 1;
  double steady = 0.0;
  std::vector<double> per_root(static_cast<size_t>(n_roots), 0.0);

  if (problem.geometry == Geometry::slab) {
    const PlanarSeries series = PlanarSeries::build(problem, n_roots);
    steady = steady_profile(probe_x, problem.b).first;
    const int per = series.poles_per_root();
    for (size_t i = 0; i < series.terms().size(); ++i) {
      const auto& t = series.terms()[i];
      const double arg = t.beta * (problem.b - probe_x);
      const double n = 3.0 * std::sin(arg) + 2.0 * kSqrt3 * t.beta * std::cos(arg);
      per_root[i / static_cast<size_t>(per)] +=
          t.weight_u * n * std::exp(t.s * probe_tau);
    }
  } else {
    const SphericalSeries series = SphericalSeries::build(problem, n_roots);
    steady = steady_profile_shell(probe_x, problem.x1, problem.x2).first;
    const int per = series.poles_per_root();
    for (size_t i = 0; i < series.terms().size(); ++i) {
      const auto& t = series.terms()[i];
      const double arg = t.beta * (problem.x2 - probe_x);
      const double n = (2.0 - kSqrt3 * problem.x2) * std::sin(arg) -
                       2.0 * t.beta * problem.x2 * std::cos(arg);
      per_root[i / static_cast<size_t>(per)] +=
          t.weight_u * (n / probe_x) * std::exp(t.s * probe_tau);
    }
  }

  std::vector<double> values(static_cast<size_t>(max_modes), steady);
  for (int mode = 2; mode <= max_modes; ++mode) {
    values[static_cast<size_t>(mode - 1)] =
        values[static_cast<size_t>(mode - 2)] + per_root[static_cast<size_t>(mode - 2)];
  }

  const double reference = values.back();
  const double transient = std::max(std::abs(reference - steady), 1e-300);
  std::vector<ConvergencePoint> out;
  out.reserve(static_cast<size_t>(max_modes));
  for (int mode = 1; mode <= max_modes; ++mode) {
    ConvergencePoint p;
    p.n_modes = mode;
    p.value = values[static_cast<size_t>(mode - 1)];
    p.pct_error = 100.0 * std::abs(p.value - reference) / transient;
    out.push_back(p);
  }
  return out;
}

}  // namespace marshak
