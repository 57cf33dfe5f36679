// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "marshak/model.hpp"
#include "marshak/roots.hpp"
#include "marshak/series.hpp"

namespace marshak {

/// Residue-series solution for the shell irradiated on its inner surface.
/// The transformed fields w = u*x, g = v*x obey the slab equations, so the
/// pole algebra is shared; evaluation divides the 1/x structure back out.
class SphericalSeries {
 public:
  static SphericalSeries build(const DimensionlessProblem& problem, int n_roots);

  const DimensionlessProblem& problem() const { return problem_; }
  const RootSet& roots() const { return roots_; }
  const std::vector<SeriesTerm>& terms() const { return terms_; }
  int poles_per_root() const { return poles_per_root_; }

 private:
  DimensionlessProblem problem_;
  RootSet roots_;
  std::vector<SeriesTerm> terms_;
  int poles_per_root_ = 0;
};

/// Steady profile; has the source-free form A/x + B.
std::pair<double, double> steady_profile_shell(double x, double x1, double x2);

Fields evaluate_fields_shell(const SphericalSeries& series, double x, double tau);
Gradients evaluate_gradients_shell(const SphericalSeries& series, double x, double tau);

/// J_minus at the inner surface (u + (2/sqrt 3) u'), J_plus at the outer
/// (u - (2/sqrt 3) u').
Currents leakage_currents_shell(const SphericalSeries& series, double tau);

/// Volume-integrated densities. psi_r/psi_m use the literal weight
/// int 4 pi x^2 (.) dx; the _avg columns divide by the shell volume
/// 4 pi (X2^3 - X1^3)/3. Both normalizations are reported.
struct ShellIntegrals {
  double psi_r = 0.0;
  double psi_m = 0.0;
  double psi_r_avg = 0.0;
  double psi_m_avg = 0.0;
  double tol = 0.0;
};
ShellIntegrals integrated_densities_shell(const SphericalSeries& series, double tau);

/// LHS - RHS of eps d(psi_r)/dtau + d(psi_m)/dtau
///   = 4 pi (X2^2 u_x(X2) - X1^2 u_x(X1)); analytic identity, roundoff result.
double energy_balance_residual_shell(const SphericalSeries& series, double tau);

FieldSnapshot evaluate_snapshot_shell(const SphericalSeries& series,
                                      const std::vector<double>& xs, double tau);

}  // namespace marshak
