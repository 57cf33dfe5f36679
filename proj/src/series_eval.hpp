// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace marshak::detail {

// Neumaier variant of compensated summation; the series terms alternate in
// sign and naive accumulation loses digits at small tau.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

// Time factor of a material-field mode, (exp(s tau) - exp(-tau)) / (s + 1).
//
// The material series is evaluated in this regrouped form: the raw residue
// weights w_u/(s+1) diverge as the slow poles crowd s = -1, which costs two
// orders of convergence in the mode count. Folding the exact tau = 0 limit
// of the tail into the steady term (v = steady*(1 - e^{-tau}) + modes with
// this factor) restores the radiation-series convergence rate and makes
// v(x, 0) = 0 exact. expm1 keeps the factor stable near s = -1.
inline double material_phase(double s, double tau) {
  const double d = s + 1.0;
  const double z = d * tau;
  if (z > 500.0) return (std::exp(s * tau) - std::exp(-tau)) / d;
  return std::exp(-tau) * std::expm1(z) / d;
}

}  // namespace marshak::detail
