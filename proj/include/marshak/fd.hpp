// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "marshak/model.hpp"

namespace marshak {

/// Staggered mesh: coordinates and fluxes live on cell edges, energy
/// densities are cell averages at the centers.
struct FdMesh {
  Geometry geometry = Geometry::slab;
  std::vector<double> edges;   ///< cell-edge coordinates, cm, strictly increasing
  std::vector<double> widths;  ///< cell widths

  int cells() const { return static_cast<int>(widths.size()); }
  double width(int i) const { return widths[static_cast<size_t>(i)]; }
  /// Half-offset width between centers i and i+1.
  double half_width(int i) const {
    return 0.5 * (widths[static_cast<size_t>(i)] + widths[static_cast<size_t>(i) + 1]);
  }
  double center(int i) const {
    return 0.5 * (edges[static_cast<size_t>(i)] + edges[static_cast<size_t>(i) + 1]);
  }
};

/// Uniform mesh over [lo, hi]; at least 3 cells.
FdMesh build_mesh(Geometry geometry, double lo, double hi, int cells);

struct FdParams {
  double kappa = 100.0;
  double eps = 0.1;
  double c = kDefaultLightSpeed;
  double f_inc = kDefaultLightSpeed / 4.0;  ///< F_inc = c/4 makes E == u
};

/// March state. For the shell the arrays hold the transformed variables
/// E' = E*r and theta' = a T^4 * r.
struct FdState {
  long step = 0;
  double t = 0.0;  ///< seconds
  std::vector<double> e;
  std::vector<double> theta;
};

FdState make_initial_state(const FdMesh& mesh);

struct TridiagonalSystem {
  std::vector<double> lower;  ///< sub-diagonal, lower[0] unused
  std::vector<double> diag;
  std::vector<double> upper;  ///< super-diagonal, upper[n-1] unused
  std::vector<double> rhs;

  size_t size() const { return diag.size(); }
};

TridiagonalSystem assemble_slab_system(const FdState& state, const FdMesh& mesh,
                                       const FdParams& p, double dt);
TridiagonalSystem assemble_shell_system(const FdState& state, const FdMesh& mesh,
                                        const FdParams& p, double dt);

/// Thomas elimination. Requires strict diagonal dominance (checked) and
/// verifies the solve residual against 1e-12 * |rhs|_inf.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

/// One fully implicit step: tridiagonal solve for E, then the explicit-in-E
/// update of theta.
void advance(FdState& state, const FdMesh& mesh, const FdParams& p, double dt);

/// Boundary fluxes (F at the first and last edge) consistent with the
/// eliminated edge energies used in the boundary rows.
std::pair<double, double> boundary_fluxes(const FdState& state, const FdMesh& mesh,
                                          const FdParams& p);

/// Piecewise-constant time-step schedule: use phase.dt (seconds) while the
/// scaled time is below phase.until_tau.
struct SchedulePhase {
  double dt = 0.0;
  double until_tau = 0.0;
};

struct TimeSchedule {
  std::vector<SchedulePhase> phases;
  /// Two-phase production schedule: dt = 3.33e-15 s up to tau = 0.1,
  /// then dt = 3.33e-12 s.
  static TimeSchedule two_phase_default();
};

struct FdRunConfig {
  int cells = 100;
  double kappa = 100.0;
  double c = kDefaultLightSpeed;
  TimeSchedule schedule = TimeSchedule::two_phase_default();
};

/// March the scaled problem and capture snapshots at the requested scaled
/// times (nearest completed step; the actual tau is recorded). Snapshot
/// fields are converted to (u, v) via the model scale factors.
std::vector<FieldSnapshot> run(const DimensionlessProblem& problem,
                               const FdRunConfig& config,
                               const std::vector<double>& probe_taus);

/// Scaled integrated densities (sum of u resp. v over cell volumes) of a
/// state; shell values use the literal 4 pi x^2 weight.
std::pair<double, double> integrated_state(const FdState& state, const FdMesh& mesh,
                                           const FdParams& p);

}  // namespace marshak
