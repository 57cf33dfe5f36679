// SPDX-License-Identifier: Apache-2.0
#include "marshak/fd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace marshak {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

void check_state(const FdState& state, const FdMesh& mesh) {
  if (static_cast<int>(state.e.size()) != mesh.cells() ||
      static_cast<int>(state.theta.size()) != mesh.cells()) {
    throw std::invalid_argument("fd: state arrays do not match the mesh");
  }
}

}  // namespace

FdMesh build_mesh(Geometry geometry, double lo, double hi, int cells) {
  if (cells < 3) throw std::invalid_argument("build_mesh: cells must be >= 3");
  if (!(hi > lo)) throw std::invalid_argument("build_mesh: requires hi > lo");
  if (geometry == Geometry::shell && !(lo > 0.0)) {
    throw std::invalid_argument("build_mesh: shell requires lo > 0");
  }
  FdMesh mesh;
  mesh.geometry = geometry;
  mesh.edges.resize(static_cast<size_t>(cells) + 1);
  mesh.widths.resize(static_cast<size_t>(cells));
  const double dz = (hi - lo) / cells;
  for (int i = 0; i <= cells; ++i) {
    mesh.edges[static_cast<size_t>(i)] = lo + dz * i;
  }
  mesh.edges.back() = hi;
  for (int i = 0; i < cells; ++i) {
    mesh.widths[static_cast<size_t>(i)] =
        mesh.edges[static_cast<size_t>(i) + 1] - mesh.edges[static_cast<size_t>(i)];
  }
  return mesh;
}

FdState make_initial_state(const FdMesh& mesh) {
  FdState st;
  st.e.assign(static_cast<size_t>(mesh.cells()), 0.0);
  st.theta.assign(static_cast<size_t>(mesh.cells()), 0.0);
  return st;
}

TridiagonalSystem assemble_slab_system(const FdState& state, const FdMesh& mesh,
                                       const FdParams& p, double dt) {
  check_state(state, mesh);
  if (!(dt > 0.0)) throw std::invalid_argument("assemble_slab_system: dt must be > 0");
  const int n = mesh.cells();
  const double gamma = 1.0 / (p.c * dt);
  const double kge = p.kappa / (gamma + p.eps * p.kappa);

  TridiagonalSystem sys;
  sys.lower.assign(static_cast<size_t>(n), 0.0);
  sys.diag.assign(static_cast<size_t>(n), 0.0);
  sys.upper.assign(static_cast<size_t>(n), 0.0);
  sys.rhs.assign(static_cast<size_t>(n), 0.0);

  for (int i = 1; i < n - 1; ++i) {
    const double dzi = mesh.width(i);
    const double dzm = mesh.half_width(i - 1);
    const double dzp = mesh.half_width(i);
    const double a = 3.0 * p.kappa * dzi * dzm * gamma;
    const size_t k = static_cast<size_t>(i);
    sys.lower[k] = -1.0;
    sys.diag[k] = 1.0 + dzm / dzp + a * (1.0 + kge);
    sys.upper[k] = -dzm / dzp;
    sys.rhs[k] = a * (state.e[k] + kge * state.theta[k]);
  }

  {  // first cell: Marshak condition with incident flux, edge energy eliminated
    const double dz1 = mesh.width(0);
    const double dz32 = mesh.half_width(0);
    const double bc = 2.0 / (dz1 / dz32 + 4.0 / (3.0 * p.kappa * dz32));
    const double a = 3.0 * p.kappa * dz1 * dz32 * gamma;
    sys.diag[0] = 1.0 + bc + a * (1.0 + kge);
    sys.upper[0] = -1.0;
    sys.rhs[0] = a * (state.e[0] + kge * state.theta[0]) +
                 (4.0 / p.c) * p.f_inc * bc;
  }

  {  // last cell: outgoing Marshak condition, same elimination
    const size_t k = static_cast<size_t>(n - 1);
    const double dzn = mesh.width(n - 1);
    const double dzm = mesh.half_width(n - 2);
    const double bc = 2.0 / (dzn / dzm + 4.0 / (3.0 * p.kappa * dzm));
    const double a = 3.0 * p.kappa * dzn * dzm * gamma;
    sys.lower[k] = -1.0;
    sys.diag[k] = 1.0 + bc + a * (1.0 + kge);
    sys.rhs[k] = a * (state.e[k] + kge * state.theta[k]);
  }
  return sys;
}

TridiagonalSystem assemble_shell_system(const FdState& state, const FdMesh& mesh,
                                        const FdParams& p, double dt) {
  check_state(state, mesh);
  if (!(dt > 0.0)) throw std::invalid_argument("assemble_shell_system: dt must be > 0");
  if (mesh.geometry != Geometry::shell) {
    throw std::invalid_argument("assemble_shell_system: mesh is not a shell mesh");
  }
  const int n = mesh.cells();
  const double gamma = 1.0 / (p.c * dt);
  const double kge = p.kappa / (gamma + p.eps * p.kappa);
  const double r1 = mesh.edges.front();
  const double r2 = mesh.edges.back();

  TridiagonalSystem sys;
  sys.lower.assign(static_cast<size_t>(n), 0.0);
  sys.diag.assign(static_cast<size_t>(n), 0.0);
  sys.upper.assign(static_cast<size_t>(n), 0.0);
  sys.rhs.assign(static_cast<size_t>(n), 0.0);

  // Interior rows are identical to the slab in the transformed variables.
  for (int i = 1; i < n - 1; ++i) {
    const double dri = mesh.width(i);
    const double drm = mesh.half_width(i - 1);
    const double drp = mesh.half_width(i);
    const double a = 3.0 * p.kappa * dri * drm * gamma;
    const size_t k = static_cast<size_t>(i);
    sys.lower[k] = -1.0;
    sys.diag[k] = 1.0 + drm / drp + a * (1.0 + kge);
    sys.upper[k] = -drm / drp;
    sys.rhs[k] = a * (state.e[k] + kge * state.theta[k]);
  }

  {  // first cell, inner surface at r1
    const double dr1 = mesh.width(0);
    const double dr32 = mesh.half_width(0);
    const double bc = 2.0 * (2.0 + 3.0 * p.kappa * r1) * dr32 /
                      (4.0 * r1 + 3.0 * p.kappa * r1 * dr1 + 2.0 * dr1);
    const double a = 3.0 * p.kappa * dr1 * dr32 * gamma;
    const double src = (24.0 * p.f_inc / p.c) /
                       (4.0 / (r1 * p.kappa * dr32) + 3.0 * dr1 / (dr32 * r1) +
                        2.0 * dr1 / (r1 * r1 * p.kappa * dr32));
    sys.diag[0] = 1.0 + bc + a * (1.0 + kge);
    sys.upper[0] = -1.0;
    sys.rhs[0] = a * (state.e[0] + kge * state.theta[0]) + src;
  }

  {  // last cell, outer surface at r2
    const size_t k = static_cast<size_t>(n - 1);
    const double drn = mesh.width(n - 1);
    const double drm = mesh.half_width(n - 2);
    const double bc = 2.0 * drm * (3.0 * p.kappa * r2 - 2.0) /
                      ((3.0 * p.kappa * r2 - 2.0) * drn + 4.0 * r2);
    const double a = 3.0 * p.kappa * drn * drm * gamma;
    sys.lower[k] = -1.0;
    sys.diag[k] = 1.0 + bc + a * (1.0 + kge);
    sys.rhs[k] = a * (state.e[k] + kge * state.theta[k]);
  }
  return sys;
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
  const size_t n = sys.size();
  if (n == 0 || sys.lower.size() != n || sys.upper.size() != n || sys.rhs.size() != n) {
    throw std::invalid_argument("thomas_solve: inconsistent system arrays");
  }
  double rhs_norm = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double off = (i > 0 ? std::abs(sys.lower[i]) : 0.0) +
                       (i + 1 < n ? std::abs(sys.upper[i]) : 0.0);
    if (!(std::abs(sys.diag[i]) > off)) {
      throw std::runtime_error("thomas_solve: diagonal dominance violated at row " +
                               std::to_string(i));
    }
    rhs_norm = std::max(rhs_norm, std::abs(sys.rhs[i]));
  }

  std::vector<double> c_prime(n, 0.0), x(n, 0.0);
  c_prime[0] = sys.upper[0] / sys.diag[0];
  x[0] = sys.rhs[0] / sys.diag[0];
  for (size_t i = 1; i < n; ++i) {
    const double m = 1.0 / (sys.diag[i] - sys.lower[i] * c_prime[i - 1]);
    c_prime[i] = sys.upper[i] * m;
    x[i] = (sys.rhs[i] - sys.lower[i] * x[i - 1]) * m;
  }
  for (size_t i = n - 1; i > 0; --i) {
    x[i - 1] -= c_prime[i - 1] * x[i];
  }

  double resid = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double r = sys.diag[i] * x[i] - sys.rhs[i];
    if (i > 0) r += sys.lower[i] * x[i - 1];
    if (i + 1 < n) r += sys.upper[i] * x[i + 1];
    resid = std::max(resid, std::abs(r));
  }
  if (resid > 1e-12 * std::max(rhs_norm, 1e-300)) {
    throw std::runtime_error("thomas_solve: solve residual above tolerance");
  }
  return x;
}

void advance(FdState& state, const FdMesh& mesh, const FdParams& p, double dt) {
  const TridiagonalSystem sys =
      mesh.geometry == Geometry::slab ? assemble_slab_system(state, mesh, p, dt)
                                      : assemble_shell_system(state, mesh, p, dt);
  std::vector<double> e_next = thomas_solve(sys);

  const double gamma = 1.0 / (p.c * dt);
  const double denom = gamma + p.eps * p.kappa;
  for (size_t i = 0; i < e_next.size(); ++i) {
    state.theta[i] = (gamma * state.theta[i] + p.eps * p.kappa * e_next[i]) / denom;
  }
  state.e = std::move(e_next);
  state.t += dt;
  state.step += 1;
}

std::pair<double, double> boundary_fluxes(const FdState& state, const FdMesh& mesh,
                                          const FdParams& p) {
  check_state(state, mesh);
  const int n = mesh.cells();
  if (mesh.geometry == Geometry::slab) {
    const double dz1 = mesh.width(0);
    const double dzn = mesh.width(n - 1);
    const double f_left = -2.0 * p.c * (state.e[0] - 4.0 * p.f_inc / p.c) /
                          (3.0 * p.kappa * dz1 + 4.0);
    const double f_right = 2.0 * p.c * state.e[static_cast<size_t>(n - 1)] /
                           (3.0 * p.kappa * dzn + 4.0);
    return {f_left, f_right};
  }
  const double r1 = mesh.edges.front();
  const double r2 = mesh.edges.back();
  const double dr1 = mesh.width(0);
  const double drn = mesh.width(n - 1);
  // Edge energies from the boundary-row eliminations, in transformed variables.
  const double d1 = 1.0 + 2.0 / (3.0 * p.kappa * r1) + 4.0 / (3.0 * p.kappa * dr1);
  const double e_half = (4.0 * p.f_inc * r1 / p.c +
                         4.0 * state.e[0] / (3.0 * p.kappa * dr1)) / d1;
  const double f_left = -2.0 * p.c * (state.e[0] - e_half) / (3.0 * p.kappa * dr1);
  const double f_right = (2.0 * p.c / (3.0 * p.kappa)) *
                         state.e[static_cast<size_t>(n - 1)] *
                         (3.0 * p.kappa * r2 - 2.0) /
                         ((3.0 * p.kappa * r2 - 2.0) * drn + 4.0 * r2);
  return {f_left, f_right};
}

TimeSchedule TimeSchedule::two_phase_default() {
  TimeSchedule s;
  s.phases.push_back({3.33e-15, 0.1});
  s.phases.push_back({3.33e-12, std::numeric_limits<double>::infinity()});
  return s;
}

std::pair<double, double> integrated_state(const FdState& state, const FdMesh& mesh,
                                           const FdParams& p) {
  check_state(state, mesh);
  const double u_scale = p.c / (4.0 * p.f_inc);
  const double x_scale = kSqrt3 * p.kappa;
  double psi_r = 0.0, psi_m = 0.0;
  for (int i = 0; i < mesh.cells(); ++i) {
    const size_t k = static_cast<size_t>(i);
    const double dx = x_scale * mesh.width(i);
    if (mesh.geometry == Geometry::slab) {
      psi_r += u_scale * state.e[k] * dx;
      psi_m += u_scale * state.theta[k] * dx;
    } else {
      const double xc = x_scale * mesh.center(i);
      // u = E'/r; weight 4 pi x^2 dx leaves one power of x on the transform.
      const double w = 4.0 * std::numbers::pi * xc * dx;
      psi_r += u_scale * state.e[k] * x_scale * w;
      psi_m += u_scale * state.theta[k] * x_scale * w;
    }
  }
  return {psi_r, psi_m};
}

std::vector<FieldSnapshot> run(const DimensionlessProblem& problem,
                               const FdRunConfig& config,
                               const std::vector<double>& probe_taus) {
  if (probe_taus.empty()) return {};
  for (size_t i = 1; i < probe_taus.size(); ++i) {
    if (!(probe_taus[i] > probe_taus[i - 1])) {
      throw std::invalid_argument("fd::run: probe times must be strictly increasing");
    }
  }
  if (!(problem.eps > 0.0)) {
    throw std::invalid_argument("fd::run: the physical march requires eps > 0");
  }

  FdParams p;
  p.kappa = config.kappa;
  p.eps = problem.eps;
  p.c = config.c;
  p.f_inc = config.c / 4.0;

  const double x_scale = kSqrt3 * p.kappa;
  FdMesh mesh = problem.geometry == Geometry::slab
                    ? build_mesh(Geometry::slab, 0.0, problem.b / x_scale, config.cells)
                    : build_mesh(Geometry::shell, problem.x1 / x_scale,
                                 problem.x2 / x_scale, config.cells);

  const double tau_per_t = problem.eps * p.c * p.kappa;
  const double u_scale = p.c / (4.0 * p.f_inc);

  auto to_snapshot = [&](const FdState& st) {
    FieldSnapshot snap;
    snap.tau = tau_per_t * st.t;
    const int n = mesh.cells();
    snap.x.resize(static_cast<size_t>(n));
    snap.u.resize(static_cast<size_t>(n));
    snap.v.resize(static_cast<size_t>(n));
    snap.du_dx.resize(static_cast<size_t>(n));
    snap.dv_dx.resize(static_cast<size_t>(n));
    snap.tol.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      const size_t k = static_cast<size_t>(i);
      snap.x[k] = x_scale * mesh.center(i);
      if (mesh.geometry == Geometry::slab) {
        snap.u[k] = u_scale * st.e[k];
        snap.v[k] = u_scale * st.theta[k];
      } else {
        snap.u[k] = u_scale * st.e[k] / mesh.center(i);
        snap.v[k] = u_scale * st.theta[k] / mesh.center(i);
      }
    }
    for (int i = 0; i < n; ++i) {
      const size_t k = static_cast<size_t>(i);
      const double dx = snap.x[1] - snap.x[0];
      if (i == 0) {
        snap.du_dx[k] = (-3.0 * snap.u[0] + 4.0 * snap.u[1] - snap.u[2]) / (2.0 * dx);
        snap.dv_dx[k] = (-3.0 * snap.v[0] + 4.0 * snap.v[1] - snap.v[2]) / (2.0 * dx);
      } else if (i == n - 1) {
        snap.du_dx[k] = (3.0 * snap.u[k] - 4.0 * snap.u[k - 1] + snap.u[k - 2]) / (2.0 * dx);
        snap.dv_dx[k] = (3.0 * snap.v[k] - 4.0 * snap.v[k - 1] + snap.v[k - 2]) / (2.0 * dx);
      } else {
        snap.du_dx[k] = (snap.u[k + 1] - snap.u[k - 1]) / (2.0 * dx);
        snap.dv_dx[k] = (snap.v[k + 1] - snap.v[k - 1]) / (2.0 * dx);
      }
    }
    return snap;
  };

  FdState state = make_initial_state(mesh);
  FdState prev = state;
  std::vector<FieldSnapshot> snaps;
  size_t next_probe = 0;
  size_t phase_idx = 0;

  while (next_probe < probe_taus.size()) {
    double tau_now = tau_per_t * state.t;
    while (phase_idx < config.schedule.phases.size() &&
           tau_now >= config.schedule.phases[phase_idx].until_tau) {
      ++phase_idx;
    }
    if (phase_idx >= config.schedule.phases.size()) {
      throw std::runtime_error("fd::run: schedule exhausted before the last probe");
    }
    prev = state;
    advance(state, mesh, p, config.schedule.phases[phase_idx].dt);
    tau_now = tau_per_t * state.t;
    while (next_probe < probe_taus.size() && tau_now >= probe_taus[next_probe]) {
      const double tau_prev = tau_per_t * prev.t;
      const bool use_prev = std::abs(tau_prev - probe_taus[next_probe]) <
                            std::abs(tau_now - probe_taus[next_probe]);
      snaps.push_back(to_snapshot(use_prev ? prev : state));
      ++next_probe;
    }
  }
  return snaps;
}

}  // namespace marshak
