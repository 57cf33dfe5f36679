// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace marshak {

/// One exponential mode of a residue series. weight_v carries the extra
/// 1/(s+1) of the material field relative to the radiation field.
struct SeriesTerm {
  double beta = 0.0;
  double s = 0.0;
  double weight_u = 0.0;
  double weight_v = 0.0;
};

struct Fields {
  double u = 0.0;
  double v = 0.0;
  double tol = 0.0;  ///< truncation bound: 2x the last root's term magnitude
};

struct Gradients {
  double du_dx = 0.0;
  double dv_dx = 0.0;
  double tol = 0.0;
};

struct Currents {
  double j_minus = 0.0;  ///< outgoing partial current at the irradiated face
  double j_plus = 0.0;   ///< outgoing partial current at the far face
  double tol = 0.0;
};

}  // namespace marshak
