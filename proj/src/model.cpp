// SPDX-License-Identifier: Apache-2.0
#include "marshak/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace marshak {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

std::string to_string(Geometry g) {
  return g == Geometry::slab ? "slab" : "shell";
}

DimensionlessProblem DimensionlessProblem::make_slab(double b, double eps) {
  require_positive(b, "b");
  if (eps < 0.0 || !std::isfinite(eps)) throw std::invalid_argument("eps must be >= 0");
  DimensionlessProblem p;
  p.geometry = Geometry::slab;
  p.b = b;
  p.eps = eps;
  return p;
}

DimensionlessProblem DimensionlessProblem::make_shell(double x1, double x2, double eps) {
  require_positive(x1, "x1");
  require_positive(x2, "x2");
  if (!(x1 < x2)) throw std::invalid_argument("shell requires x1 < x2");
  if (eps < 0.0 || !std::isfinite(eps)) throw std::invalid_argument("eps must be >= 0");
  DimensionlessProblem p;
  p.geometry = Geometry::shell;
  p.x1 = x1;
  p.x2 = x2;
  p.eps = eps;
  return p;
}

ScaledProblem nondimensionalize(const PhysicalParams& p) {
  require_positive(p.kappa, "kappa");
  require_positive(p.alpha, "alpha");
  require_positive(p.rad_const, "rad_const");
  require_positive(p.c, "c");
  require_positive(p.f_inc, "f_inc");

  const double eps = p.eps();
  require_positive(eps, "eps = 4a/alpha");

  ScaleFactors sf;
  sf.x_per_length = std::numbers::sqrt3 * p.kappa;
  sf.tau_per_time = eps * p.c * p.kappa;
  sf.u_per_energy_density = p.c / (4.0 * p.f_inc);

  ScaledProblem out;
  out.scales = sf;
  if (p.geometry == Geometry::slab) {
    require_positive(p.l, "l");
    out.problem = DimensionlessProblem::make_slab(sf.x_per_length * p.l, eps);
  } else {
    require_positive(p.r1, "r1");
    require_positive(p.r2, "r2");
    if (!(p.r1 < p.r2)) throw std::invalid_argument("shell requires r1 < r2");
    out.problem = DimensionlessProblem::make_shell(sf.x_per_length * p.r1,
                                                   sf.x_per_length * p.r2, eps);
  }
  return out;
}

PhysicalParams dimensionalize(const DimensionlessProblem& problem, double kappa,
                              double rad_const, double c) {
  require_positive(kappa, "kappa");
  require_positive(rad_const, "rad_const");
  require_positive(c, "c");
  if (!(problem.eps > 0.0)) {
    throw std::invalid_argument("dimensionalize requires eps > 0");
  }

  PhysicalParams p;
  p.kappa = kappa;
  p.rad_const = rad_const;
  p.alpha = 4.0 * rad_const / problem.eps;
  p.c = c;
  p.f_inc = c / 4.0;
  p.geometry = problem.geometry;
  const double per_length = std::numbers::sqrt3 * kappa;
  if (problem.geometry == Geometry::slab) {
    p.l = problem.b / per_length;
  } else {
    p.r1 = problem.x1 / per_length;
    p.r2 = problem.x2 / per_length;
  }
  return p;
}

double beta_squared(double s, double eps) {
  if (s == -1.0) throw std::invalid_argument("beta_squared: pole of expression at s = -1");
  return -s * (1.0 + eps * (s + 1.0)) / (s + 1.0);
}

double beta_squared_deriv(double s, double eps) {
  if (s == -1.0) throw std::invalid_argument("beta_squared_deriv: s = -1");
  const double sp1 = s + 1.0;
  return -(eps + 1.0 / (sp1 * sp1));
}

PolePair pole_pair(double beta, double eps) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("pole_pair: beta must be positive");
  }
  if (eps < 0.0) throw std::invalid_argument("pole_pair: eps must be >= 0");

  PolePair out;
  out.beta = beta;
  const double b2 = beta * beta;

  if (eps == 0.0) {
    out.n_poles = 1;
    out.s[0] = -b2 / (b2 + 1.0);
    out.dbeta_ds[0] = beta_squared_deriv(out.s[0], eps) / (2.0 * beta);
    return out;
  }

  // eps*s^2 + (1+eps+b2)*s + b2 = 0, solved in the cancellation-free form:
  // the coefficient B is always positive, so the larger-magnitude root comes
  // from -(B + sqrt(disc)) and the smaller from the product b2/eps.
  const double B = 1.0 + eps + b2;
  const double disc = (b2 + 1.0 - eps) * (b2 + 1.0 - eps) + 4.0 * eps;
  const double q = -0.5 * (B + std::sqrt(disc));
  const double s_slow = b2 / q;
  const double s_fast = q / eps;

  out.n_poles = 2;
  out.s[0] = s_slow;
  out.s[1] = s_fast;
  out.dbeta_ds[0] = beta_squared_deriv(s_slow, eps) / (2.0 * beta);
  out.dbeta_ds[1] = beta_squared_deriv(s_fast, eps) / (2.0 * beta);
  return out;
}

}  // namespace marshak
