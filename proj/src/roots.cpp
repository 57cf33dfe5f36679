// SPDX-License-Identifier: Apache-2.0
#include "marshak/roots.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace marshak {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

double refine_bracket(const std::function<double(double)>& g,
                      const std::function<double(double)>& gp, double lo, double hi,
                      double f_lo) {
  // Bisection until the interval is below 1e-13 * max(1, beta).
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-13 * std::max(1.0, mid)) break;
    const double f_mid = g(mid);
    if (f_mid == 0.0) return mid;
    if ((f_lo < 0.0) == (f_mid < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  // Two Newton polish steps, kept inside the bracket.
  double beta = 0.5 * (lo + hi);
  for (int it = 0; it < 2; ++it) {
    const double d = gp(beta);
    if (d == 0.0) break;
    const double next = beta - g(beta) / d;
    if (next <= lo || next >= hi) break;
    beta = next;
  }
  return beta;
}

}  // namespace

double planar_residual(double beta, double b) {
  return (3.0 - 4.0 * beta * beta) * std::sin(beta * b) +
         4.0 * kSqrt3 * beta * std::cos(beta * b);
}

double planar_residual_deriv(double beta, double b) {
  const double bb = beta * b;
  return (3.0 * b + 4.0 * kSqrt3 - 4.0 * beta * beta * b) * std::cos(bb) -
         (4.0 * kSqrt3 * bb + 8.0 * beta) * std::sin(bb);
}

double spherical_residual(double beta, double x1, double x2) {
  if (!(0.0 < x1 && x1 < x2)) {
    throw std::invalid_argument("spherical_residual: requires 0 < x1 < x2");
  }
  const double d = x2 - x1;
  const double b2 = beta * beta;
  return ((4.0 * b2 - 3.0) * x1 * x2 - 2.0 * kSqrt3 * d + 4.0) * std::sin(beta * d) -
         (4.0 * kSqrt3 * beta * x1 * x2 + 4.0 * beta * d) * std::cos(beta * d);
}

double spherical_residual_deriv(double beta, double x1, double x2) {
  if (!(0.0 < x1 && x1 < x2)) {
    throw std::invalid_argument("spherical_residual_deriv: requires 0 < x1 < x2");
  }
  const double d = x2 - x1;
  const double b2 = beta * beta;
  const double sum_sq = x1 * x1 + x2 * x2;
  return beta * (4.0 * sum_sq + 4.0 * kSqrt3 * d * x1 * x2) * std::sin(beta * d) +
         ((4.0 * b2 - 3.0) * x1 * x2 * d - 2.0 * kSqrt3 * sum_sq) * std::cos(beta * d);
}

RootSet find_roots(const DimensionlessProblem& problem, int n) {
  if (n < 1) throw std::invalid_argument("find_roots: n must be >= 1");

  const double width = problem.width();
  std::function<double(double)> g, gp;
  if (problem.geometry == Geometry::slab) {
    const double b = problem.b;
    g = [b](double beta) { return planar_residual(beta, b); };
    gp = [b](double beta) { return planar_residual_deriv(beta, b); };
  } else {
    const double x1 = problem.x1, x2 = problem.x2;
    g = [x1, x2](double beta) { return spherical_residual(beta, x1, x2); };
    gp = [x1, x2](double beta) { return spherical_residual_deriv(beta, x1, x2); };
  }

  RootSet out;
  out.problem = problem;
  out.roots.reserve(static_cast<size_t>(n));
  out.residuals.reserve(static_cast<size_t>(n));

  // The roots space out to one per pi/width; 20 samples per interval
  // guarantees the scan never straddles two sign changes. beta = 0 is a
  // trivial zero of g and not an eigenvalue, so the scan starts just above.
  const double step = std::numbers::pi / (20.0 * width);
  const double scan_limit = (static_cast<double>(n) + 5.0) * std::numbers::pi / width * 4.0;

  double lo = 1e-6 / width;
  double f_lo = g(lo);
  while (static_cast<int>(out.roots.size()) < n) {
    const double hi = lo + step;
    const double f_hi = g(hi);
    if (f_hi == 0.0) {
      out.roots.push_back(hi);
    } else if ((f_lo < 0.0) != (f_hi < 0.0)) {
      out.roots.push_back(refine_bracket(g, gp, lo, hi, f_lo));
    }
    lo = hi;
    f_lo = f_hi;
    if (lo > scan_limit) {
      throw std::runtime_error("find_roots: bracket exhaustion at branch index " +
                               std::to_string(out.roots.size() + 1));
    }
  }

  for (double beta : out.roots) {
    out.residuals.push_back(std::abs(g(beta)) / (1.0 + std::abs(gp(beta))));
  }
  return out;
}

}  // namespace marshak
