// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "marshak/model.hpp"

namespace marshak {

/// Closed-form Laplace transform u_bar(x, s) of the radiation field.
/// Real for real s away from the poles; switches between the trigonometric
/// branch (beta^2 > 0) and an overflow-safe exponential form of the
/// hyperbolic branch (beta^2 < 0, the case for all s > 0).
double laplace_space_u(double x, double s, const DimensionlessProblem& problem);

/// v_bar = u_bar / (s+1).
double laplace_space_v(double x, double s, const DimensionlessProblem& problem);

/// Gaver-Stehfest inversion of a transform sampled on the positive real
/// axis. terms must be even, in [10, 18]; weights and the alternating sum
/// are accumulated in long double.
double stehfest_invert(const std::function<double(double)>& fbar, double tau, int terms);

struct InversionResult {
  double u = 0.0;
  double v = 0.0;
  double u_spread = 0.0;  ///< |value(terms) - value(terms-2)|, a stability estimate
  double v_spread = 0.0;
};

/// Numerical inversion of the closed-form transforms; independent of the
/// residue-series evaluation path.
InversionResult invert_numerically(double x, double tau,
                                   const DimensionlessProblem& problem,
                                   int terms = 14);

struct PointError {
  double x = 0.0;
  double tau = 0.0;
  char field = 'u';
  double abs_err = 0.0;
  double rel_err = 0.0;
};

struct ComparisonReport {
  std::vector<PointError> points;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  double mean_abs_error = 0.0;
  double mean_rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Pointwise comparison of two snapshots on the same grid (no interpolation;
/// mismatched grids throw). Relative errors use max(|a|,|b|,1e-12).
ComparisonReport compare(const FieldSnapshot& a, const FieldSnapshot& b,
                         double tolerance);

struct ConvergencePoint {
  int n_modes = 0;      ///< 1 = steady term alone; each extra mode adds one root
  double value = 0.0;   ///< u at the probe with that truncation
  double pct_error = 0.0;
};

/// Truncation study of u(probe_x, probe_tau). Mode count starts at the
/// steady (s = 0) contribution, so n_modes = m uses m-1 transcendental
/// roots. Errors are percentages of the reference transient amplitude
/// |value(max_modes) - steady|, measured against the max_modes value.
std::vector<ConvergencePoint> convergence_study(const DimensionlessProblem& problem,
                                                double probe_x, double probe_tau,
                                                int max_modes);

}  // namespace marshak
