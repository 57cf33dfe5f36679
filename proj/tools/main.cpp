// SPDX-License-Identifier: Apache-2.0
//
// marshak-bench: table-emitting driver for the finite-slab / spherical-shell
// non-equilibrium radiative diffusion benchmark. Every subcommand prints a
// deterministic CSV or JSON table with a metadata header; verification
// subcommands also set the exit code (0 pass, 1 fail, 2 usage error).

#include <cstdlib>
#include <ctime>
#include <exception>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "marshak/fd.hpp"
#include "marshak/model.hpp"
#include "marshak/planar.hpp"
#include "marshak/roots.hpp"
#include "marshak/spherical.hpp"
#include "marshak/table.hpp"
#include "marshak/verify.hpp"

namespace {

using namespace marshak;

struct ProblemOptions {
  std::string geometry = "slab";
  double b = 1.0;
  double x1 = 1.0;
  double x2 = 2.0;
  double eps = 0.1;

  DimensionlessProblem make() const {
    if (geometry == "slab") return DimensionlessProblem::make_slab(b, eps);
    return DimensionlessProblem::make_shell(x1, x2, eps);
  }
};

struct OutputOptions {
  std::string out = "-";
  std::string format = "csv";
  bool stamp = false;
};

void add_problem_flags(CLI::App* cmd, ProblemOptions& opt) {
  cmd->add_option("--geometry", opt.geometry, "slab or shell")
      ->check(CLI::IsMember({"slab", "shell"}))
      ->capture_default_str();
  cmd->add_option("--b", opt.b, "scaled slab thickness")->capture_default_str();
  cmd->add_option("--x1", opt.x1, "scaled shell inner radius")->capture_default_str();
  cmd->add_option("--x2", opt.x2, "scaled shell outer radius")->capture_default_str();
  cmd->add_option("--eps", opt.eps, "retardation parameter (0 allowed for analytic)")
      ->capture_default_str();
}

void add_output_flags(CLI::App* cmd, OutputOptions& opt) {
  cmd->add_option("--out", opt.out, "output path, '-' for stdout")
      ->capture_default_str();
  cmd->add_option("--format", opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--stamp", opt.stamp,
                "embed a generation timestamp in the metadata header");
}

std::string resolve_path(const std::string& out) {
  if (out == "-") return out;
  const char* dir = std::getenv("MARSHAK_OUT_DIR");
  if (dir != nullptr && *dir != '\0' && std::filesystem::path(out).is_relative()) {
    return (std::filesystem::path(dir) / out).string();
  }
  return out;
}

void emit(BenchmarkTable& table, const OutputOptions& opt) {
  if (opt.stamp) {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    table.meta("generated_at", buf);
  }
  write_table(table, resolve_path(opt.out),
              opt.format == "csv" ? TableFormat::csv : TableFormat::json);
}

void problem_metadata(BenchmarkTable& table, const ProblemOptions& opt) {
  table.meta("tool", "marshak-bench");
  table.meta("version", kVersion);
  table.meta("geometry", opt.geometry);
  if (opt.geometry == "slab") {
    table.meta("b", format_double(opt.b));
  } else {
    table.meta("x1", format_double(opt.x1));
    table.meta("x2", format_double(opt.x2));
  }
  table.meta("eps", format_double(opt.eps));
}

std::vector<double> uniform_grid(const DimensionlessProblem& p, int nx) {
  std::vector<double> xs;
  xs.reserve(static_cast<size_t>(nx));
  const double lo = p.geometry == Geometry::slab ? 0.0 : p.x1;
  const double hi = p.geometry == Geometry::slab ? p.b : p.x2;
  for (int i = 0; i < nx; ++i) {
    xs.push_back(lo + (hi - lo) * i / (nx - 1));
  }
  return xs;
}

const std::vector<double> kFigureTaus = {0.01, 0.1, 0.5, 1.0, 2.5, 5.0, 10.0, 50.0};
const std::vector<double> kCurrentTaus = {0.01, 0.02, 0.05, 0.1, 0.2, 0.5,
                                          1.0,  2.0,  5.0,  10.0, 20.0, 50.0};

TimeSchedule parse_schedule(const std::string& text) {
  TimeSchedule sched;
  std::stringstream ss(text);
  std::string phase;
  while (std::getline(ss, phase, ',')) {
    const auto colon = phase.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("schedule phase must look like dt:until_tau");
    }
    SchedulePhase p;
    p.dt = std::stod(phase.substr(0, colon));
    const std::string until = phase.substr(colon + 1);
    p.until_tau = (until == "inf") ? std::numeric_limits<double>::infinity()
                                   : std::stod(until);
    sched.phases.push_back(p);
  }
  if (sched.phases.empty()) throw std::invalid_argument("empty schedule");
  return sched;
}

std::string schedule_text(const TimeSchedule& s) {
  std::string out;
  for (const auto& p : s.phases) {
    if (!out.empty()) out += ",";
    out += format_double(p.dt) + ":" +
           (std::isinf(p.until_tau) ? std::string("inf") : format_double(p.until_tau));
  }
  return out;
}

const char* kFieldColumns[] = {"geometry", "method", "eps", "n_roots_or_cells",
                               "x",        "tau",    "u",   "v",
                               "du_dx",    "dv_dx",  "tol"};

void append_snapshot_rows(BenchmarkTable& table, const FieldSnapshot& snap,
                          const std::string& geometry, const std::string& method,
                          double eps, int n) {
  for (size_t i = 0; i < snap.x.size(); ++i) {
    table.add_row({Cell::of(geometry), Cell::of(method), Cell::of(eps), Cell::of(n),
                   Cell::of(snap.x[i]), Cell::of(snap.tau), Cell::of(snap.u[i]),
                   Cell::of(snap.v[i]), Cell::of(snap.du_dx[i]),
                   Cell::of(snap.dv_dx[i]), Cell::of(snap.tol[i])});
  }
}

int cmd_analytic(const ProblemOptions& popt, const OutputOptions& oopt, int n_roots,
                 int nx, const std::vector<double>& taus) {
  const DimensionlessProblem problem = popt.make();
  const std::vector<double> xs = uniform_grid(problem, nx);

  BenchmarkTable table;
  problem_metadata(table, popt);
  table.meta("method", "analytic");
  table.meta("n_roots", std::to_string(n_roots));
  table.meta("tol_column", "2x magnitude of the last mode, per point");
  table.columns.assign(std::begin(kFieldColumns), std::end(kFieldColumns));

  if (problem.geometry == Geometry::slab) {
    const PlanarSeries series = PlanarSeries::build(problem, n_roots);
    for (double tau : taus) {
      append_snapshot_rows(table, evaluate_snapshot(series, xs, tau), popt.geometry,
                           "analytic", popt.eps, n_roots);
    }
  } else {
    const SphericalSeries series = SphericalSeries::build(problem, n_roots);
    for (double tau : taus) {
      append_snapshot_rows(table, evaluate_snapshot_shell(series, xs, tau),
                           popt.geometry, "analytic", popt.eps, n_roots);
    }
  }
  emit(table, oopt);
  return 0;
}

int cmd_currents(const ProblemOptions& popt, const OutputOptions& oopt, int n_roots,
                 const std::vector<double>& taus) {
  const DimensionlessProblem problem = popt.make();

  BenchmarkTable table;
  problem_metadata(table, popt);
  table.meta("method", "analytic");
  table.meta("n_roots", std::to_string(n_roots));
  if (problem.geometry == Geometry::slab) {
    table.columns = {"geometry", "method",  "eps",   "n_roots_or_cells", "tau",
                     "j_minus",  "j_plus",  "psi_r", "psi_m",            "tol"};
    const PlanarSeries series = PlanarSeries::build(problem, n_roots);
    for (double tau : taus) {
      const Currents cur = leakage_currents(series, tau);
      const PlanarIntegrals psi = integrated_densities(series, tau);
      table.add_row({Cell::of(popt.geometry), Cell::of(std::string("analytic")),
                     Cell::of(popt.eps), Cell::of(n_roots), Cell::of(tau),
                     Cell::of(cur.j_minus), Cell::of(cur.j_plus), Cell::of(psi.psi_r),
                     Cell::of(psi.psi_m), Cell::of(std::max(cur.tol, psi.tol))});
    }
  } else {
    // Both normalizations of the volume integrals are reported.
    table.columns = {"geometry",  "method",  "eps",   "n_roots_or_cells", "tau",
                     "j_minus",   "j_plus",  "psi_r", "psi_m",            "psi_r_avg",
                     "psi_m_avg", "tol"};
    const SphericalSeries series = SphericalSeries::build(problem, n_roots);
    for (double tau : taus) {
      const Currents cur = leakage_currents_shell(series, tau);
      const ShellIntegrals psi = integrated_densities_shell(series, tau);
      table.add_row({Cell::of(popt.geometry), Cell::of(std::string("analytic")),
                     Cell::of(popt.eps), Cell::of(n_roots), Cell::of(tau),
                     Cell::of(cur.j_minus), Cell::of(cur.j_plus), Cell::of(psi.psi_r),
                     Cell::of(psi.psi_m), Cell::of(psi.psi_r_avg),
                     Cell::of(psi.psi_m_avg), Cell::of(std::max(cur.tol, psi.tol))});
    }
  }
  emit(table, oopt);
  return 0;
}

int cmd_fd(const ProblemOptions& popt, const OutputOptions& oopt,
           const FdRunConfig& cfg, const std::vector<double>& taus) {
  const DimensionlessProblem problem = popt.make();
  const auto snaps = run(problem, cfg, taus);

  BenchmarkTable table;
  problem_metadata(table, popt);
  table.meta("method", "fd");
  table.meta("cells", std::to_string(cfg.cells));
  table.meta("kappa", format_double(cfg.kappa));
  table.meta("light_speed", format_double(cfg.c));
  table.meta("schedule", schedule_text(cfg.schedule));
  table.columns.assign(std::begin(kFieldColumns), std::end(kFieldColumns));
  for (const auto& snap : snaps) {
    append_snapshot_rows(table, snap, popt.geometry, "fd", popt.eps, cfg.cells);
  }
  emit(table, oopt);
  return 0;
}

int cmd_compare(const ProblemOptions& popt, const OutputOptions& oopt, int n_roots,
                const FdRunConfig& cfg, const std::vector<double>& taus, double tol) {
  const DimensionlessProblem problem = popt.make();
  const auto snaps = run(problem, cfg, taus);

  BenchmarkTable table;
  problem_metadata(table, popt);
  table.meta("method", "fd_vs_analytic");
  table.meta("n_roots", std::to_string(n_roots));
  table.meta("cells", std::to_string(cfg.cells));
  table.meta("schedule", schedule_text(cfg.schedule));
  table.meta("tolerance", format_double(tol));
  table.columns = {"tau",            "max_abs_error",  "max_rel_error",
                   "mean_abs_error", "mean_rel_error", "verdict"};

  bool all_pass = true;
  for (const auto& snap : snaps) {
    FieldSnapshot ana;
    if (problem.geometry == Geometry::slab) {
      const PlanarSeries series = PlanarSeries::build(problem, n_roots);
      ana = evaluate_snapshot(series, snap.x, snap.tau);
    } else {
      const SphericalSeries series = SphericalSeries::build(problem, n_roots);
      ana = evaluate_snapshot_shell(series, snap.x, snap.tau);
    }
    const ComparisonReport rep = compare(ana, snap, tol);
    all_pass = all_pass && rep.pass;
    table.add_row({Cell::of(snap.tau), Cell::of(rep.max_abs_error),
                   Cell::of(rep.max_rel_error), Cell::of(rep.mean_abs_error),
                   Cell::of(rep.mean_rel_error),
                   Cell::of(std::string(rep.pass ? "PASS" : "FAIL"))});
    std::cerr << (rep.pass ? "PASS" : "FAIL") << " tau=" << snap.tau
              << " max_rel_error=" << rep.max_rel_error << "\n";
  }
  emit(table, oopt);
  return all_pass ? 0 : 1;
}

int cmd_convergence(const ProblemOptions& popt, const OutputOptions& oopt,
                    double probe_x, double probe_tau, int max_roots) {
  const DimensionlessProblem problem = popt.make();
  const auto ladder = convergence_study(problem, probe_x, probe_tau, max_roots);

  BenchmarkTable table;
  problem_metadata(table, popt);
  table.meta("probe_x", format_double(probe_x));
  table.meta("probe_tau", format_double(probe_tau));
  table.meta("mode_counting",
             "mode 1 is the steady term; each extra mode adds one root");
  table.meta("error_reference", "transient amplitude at the largest mode count");
  table.columns = {"n_roots", "value", "pct_error"};
  for (const auto& p : ladder) {
    table.add_row({Cell::of(p.n_modes), Cell::of(p.value), Cell::of(p.pct_error)});
  }
  emit(table, oopt);
  return 0;
}

int cmd_roots(const ProblemOptions& popt, const OutputOptions& oopt, int n) {
  const DimensionlessProblem problem = popt.make();
  const RootSet rs = find_roots(problem, n);

  BenchmarkTable table;
  problem_metadata(table, popt);
  table.meta("residual", "scaled |g(beta)| / (1 + |g'(beta)|)");
  table.columns = {"index", "beta", "residual"};
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    table.add_row({Cell::of(static_cast<int>(i) + 1), Cell::of(rs.roots[i]),
                   Cell::of(rs.residuals[i])});
  }
  emit(table, oopt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite slab and spherical shell non-equilibrium radiative "
               "diffusion benchmark tables"};
  app.require_subcommand(1);

  ProblemOptions popt;
  OutputOptions oopt;
  int n_roots = 30;
  int nx = 101;
  int cells = 100;
  double kappa = 100.0;
  double light_speed = kDefaultLightSpeed;
  std::string schedule_str = "3.33e-15:0.1,3.33e-12:inf";
  std::vector<double> taus;
  double probe_x = 0.0;
  double probe_tau = 2.5;
  int max_roots = 30;
  double tol = 0.01;

  auto* analytic = app.add_subcommand("analytic", "series solution field tables");
  add_problem_flags(analytic, popt);
  add_output_flags(analytic, oopt);
  analytic->add_option("--roots", n_roots, "number of transcendental roots")
      ->capture_default_str();
  analytic->add_option("--nx", nx, "grid points")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  analytic->add_option("--tau", taus, "scaled times (default: figure slices)")
      ->delimiter(',');

  auto* currents = app.add_subcommand(
      "currents", "leakage currents and integrated densities vs time");
  add_problem_flags(currents, popt);
  add_output_flags(currents, oopt);
  currents->add_option("--roots", n_roots, "number of transcendental roots")
      ->capture_default_str();
  currents->add_option("--tau", taus, "scaled times")->delimiter(',');

  auto* fd = app.add_subcommand("fd", "implicit finite-difference field tables");
  add_problem_flags(fd, popt);
  add_output_flags(fd, oopt);
  fd->add_option("--cells", cells, "mesh cells")->capture_default_str();
  fd->add_option("--kappa", kappa, "opacity, 1/cm")->capture_default_str();
  fd->add_option("--light-speed", light_speed, "cm/s")->capture_default_str();
  fd->add_option("--schedule", schedule_str, "comma list of dt_seconds:until_tau")
      ->capture_default_str();
  fd->add_option("--tau", taus, "probe times")->delimiter(',');

  auto* comparec = app.add_subcommand("compare", "finite difference vs series");
  add_problem_flags(comparec, popt);
  add_output_flags(comparec, oopt);
  comparec->add_option("--roots", n_roots, "series roots")->capture_default_str();
  comparec->add_option("--cells", cells, "mesh cells")->capture_default_str();
  comparec->add_option("--schedule", schedule_str, "dt_seconds:until_tau list")
      ->capture_default_str();
  comparec->add_option("--tau", taus, "probe times (default 0.01, 1)")->delimiter(',');
  comparec->add_option("--tol", tol, "max relative error verdict threshold")
      ->capture_default_str();

  auto* convergence =
      app.add_subcommand("convergence", "truncation error vs mode count");
  add_problem_flags(convergence, popt);
  add_output_flags(convergence, oopt);
  convergence->add_option("--probe-x", probe_x, "probe position")->capture_default_str();
  convergence->add_option("--probe-tau", probe_tau, "probe time")->capture_default_str();
  convergence->add_option("--max-roots", max_roots, "reference mode count")
      ->capture_default_str();

  auto* rootsc = app.add_subcommand("roots", "transcendental roots and residuals");
  add_problem_flags(rootsc, popt);
  add_output_flags(rootsc, oopt);
  rootsc->add_option("-n,--count", n_roots, "number of roots")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (analytic->parsed()) {
      return cmd_analytic(popt, oopt, n_roots, nx, taus.empty() ? kFigureTaus : taus);
    }
    if (currents->parsed()) {
      return cmd_currents(popt, oopt, n_roots, taus.empty() ? kCurrentTaus : taus);
    }
    FdRunConfig cfg;
    cfg.cells = cells;
    cfg.kappa = kappa;
    cfg.c = light_speed;
    cfg.schedule = parse_schedule(schedule_str);
    if (fd->parsed()) {
      return cmd_fd(popt, oopt, cfg, taus.empty() ? kFigureTaus : taus);
    }
    if (comparec->parsed()) {
      return cmd_compare(popt, oopt, n_roots, cfg,
                         taus.empty() ? std::vector<double>{0.01, 1.0} : taus, tol);
    }
    if (convergence->parsed()) {
      return cmd_convergence(popt, oopt, probe_x, probe_tau, max_roots);
    }
    if (rootsc->parsed()) {
      return cmd_roots(popt, oopt, n_roots);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
