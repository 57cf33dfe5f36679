// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "marshak/model.hpp"
#include "marshak/roots.hpp"
#include "marshak/series.hpp"

namespace marshak {

/// Residue-series solution for the irradiated finite slab.
/// Immutable after build; all evaluations are pure and thread-safe.
class PlanarSeries {
 public:
  static PlanarSeries build(const DimensionlessProblem& problem, int n_roots);

  const DimensionlessProblem& problem() const { return problem_; }
  const RootSet& roots() const { return roots_; }
  const std::vector<SeriesTerm>& terms() const { return terms_; }
  /// Number of poles contributed by root index i (1 for eps = 0, else 2).
  int poles_per_root() const { return poles_per_root_; }

 private:
  DimensionlessProblem problem_;
  RootSet roots_;
  std::vector<SeriesTerm> terms_;
  int poles_per_root_ = 0;
};

/// Equilibrium profile (3b + 2 sqrt(3) - 3x)/(3b + 4 sqrt(3)); u and v coincide.
std::pair<double, double> steady_profile(double x, double b);

Fields evaluate_fields(const PlanarSeries& series, double x, double tau);
Gradients evaluate_gradients(const PlanarSeries& series, double x, double tau);
Currents leakage_currents(const PlanarSeries& series, double tau);

/// Integrated densities psi_r = int_0^b u dx, psi_m likewise; the per-mode
/// integrals are closed form, no quadrature involved.
struct PlanarIntegrals {
  double psi_r = 0.0;
  double psi_m = 0.0;
  double tol = 0.0;
};
PlanarIntegrals integrated_densities(const PlanarSeries& series, double tau);

/// LHS - RHS of the integral energy balance
///   eps d(psi_r)/dtau + d(psi_m)/dtau = u_x(b,tau) - u_x(0,tau),
/// which cancels term by term analytically; the result is pure roundoff.
double energy_balance_residual(const PlanarSeries& series, double tau);

/// Initial radiation profile of the eps = 0 branch,
///   u(x,0) = [3 sinh(b-x) + 2 sqrt(3) cosh(b-x)] / [7 sinh b + 4 sqrt(3) cosh b];
/// the material field starts at zero.
double eps0_initial_profile(double x, double b);

/// Evaluate fields and gradients over a grid at one time.
FieldSnapshot evaluate_snapshot(const PlanarSeries& series,
                                const std::vector<double>& xs, double tau);

}  // namespace marshak
