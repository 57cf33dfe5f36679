// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

namespace marshak {

inline constexpr double kDefaultLightSpeed = 2.99792458e10;       // cm/s
inline constexpr double kDefaultRadiationConstant = 7.5657e-15;   // erg cm^-3 K^-4

enum class Geometry { slab, shell };

std::string to_string(Geometry g);

/// Scaled problem definition: extents in optical-depth-like units
/// (x = sqrt(3)*kappa*length) plus the retardation parameter eps.
/// eps = 0 selects the no-retardation branch.
struct DimensionlessProblem {
  Geometry geometry = Geometry::slab;
  double b = 0.0;    ///< slab thickness (slab only)
  double x1 = 0.0;   ///< inner radius (shell only)
  double x2 = 0.0;   ///< outer radius (shell only)
  double eps = 0.0;

  static DimensionlessProblem make_slab(double b, double eps);
  static DimensionlessProblem make_shell(double x1, double x2, double eps);

  double width() const { return geometry == Geometry::slab ? b : x2 - x1; }
};

/// Physical inputs in CGS units. Opacity is temperature independent and the
/// specific heat is C_v = alpha*T^3, which makes the coupled system linear.
struct PhysicalParams {
  double kappa = 0.0;      ///< opacity, 1/cm
  double alpha = 0.0;      ///< specific-heat coefficient, erg cm^-3 K^-4
  double rad_const = kDefaultRadiationConstant;  ///< radiation constant a
  double c = kDefaultLightSpeed;
  double f_inc = 0.0;      ///< incident flux, erg cm^-2 s^-1
  Geometry geometry = Geometry::slab;
  double l = 0.0;          ///< slab thickness, cm
  double r1 = 0.0;         ///< shell inner radius, cm
  double r2 = 0.0;         ///< shell outer radius, cm

  double eps() const { return 4.0 * rad_const / alpha; }
};

/// Multiplicative maps between physical and scaled variables:
///   x = x_per_length * z,  tau = tau_per_time * t,  u = u_per_energy_density * E.
struct ScaleFactors {
  double x_per_length = 0.0;          // sqrt(3)*kappa
  double tau_per_time = 0.0;          // 4*a*c*kappa/alpha = eps*c*kappa
  double u_per_energy_density = 0.0;  // c/(4*F_inc)
};

struct ScaledProblem {
  DimensionlessProblem problem;
  ScaleFactors scales;
};

ScaledProblem nondimensionalize(const PhysicalParams& p);

/// Inverse map: reconstruct physical parameters that reproduce the given
/// scaled problem. Requires eps > 0 (the time scale degenerates otherwise).
PhysicalParams dimensionalize(const DimensionlessProblem& problem, double kappa,
                              double rad_const = kDefaultRadiationConstant,
                              double c = kDefaultLightSpeed);

/// Dispersion relation beta^2(s) = -s[1 + eps(s+1)]/(s+1). Throws at s = -1.
double beta_squared(double s, double eps);

/// d(beta^2)/ds = -(eps + 1/(s+1)^2).
double beta_squared_deriv(double s, double eps);

/// Laplace-plane poles associated with one transcendental root beta.
/// For eps > 0 there are two simple real poles, both negative: the roots of
/// eps*s^2 + (1+eps+beta^2)*s + beta^2 = 0. For eps = 0 there is a single
/// pole s = -beta^2/(beta^2+1). dbeta_ds holds dbeta/ds evaluated at each pole.
struct PolePair {
  double beta = 0.0;
  int n_poles = 0;
  std::array<double, 2> s{};
  std::array<double, 2> dbeta_ds{};
};

PolePair pole_pair(double beta, double eps);

/// Field values over a spatial grid at one scaled time.
struct FieldSnapshot {
  double tau = 0.0;
  std::vector<double> x;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> du_dx;
  std::vector<double> dv_dx;
  std::vector<double> tol;  ///< per-point series truncation bound (0 for FD data)
};

}  // namespace marshak
