// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "marshak/model.hpp"

namespace marshak {

/// Ordered positive roots of the transcendental boundary determinant,
/// together with scaled residuals |g(beta)| / (1 + |g'(beta)|).
/// beta = 0 is always excluded; the s = 0 pole is the steady-state term.
struct RootSet {
  DimensionlessProblem problem;
  std::vector<double> roots;
  std::vector<double> residuals;
};

/// Singularity-free form of the slab dispersion determinant:
///   g(beta) = (3 - 4 beta^2) sin(beta b) + 4 sqrt(3) beta cos(beta b).
/// Zero exactly at the eigenvalues; avoids the tan-form poles.
double planar_residual(double beta, double b);
double planar_residual_deriv(double beta, double b);

/// Cleared form of the shell determinant, same convention as the slab.
double spherical_residual(double beta, double x1, double x2);
double spherical_residual_deriv(double beta, double x1, double x2);

/// First n positive roots, bracketed by a uniform scan at step
/// pi/(20*width) and refined by bisection plus two Newton steps.
/// Deterministic; throws if a bracket cannot be found.
RootSet find_roots(const DimensionlessProblem& problem, int n);

}  // namespace marshak
