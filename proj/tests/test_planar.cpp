// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "marshak/planar.hpp"
#include "marshak/verify.hpp"

using namespace marshak;

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

// Adaptive Simpson quadrature, used as an independent oracle for the
// closed-form mode integrals.
template <typename F>
double simpson_rec(F&& f, double a, double b, double fa, double fm, double fb,
                   double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double flm = f(0.5 * (a + m));
  const double frm = f(0.5 * (m + b));
  const double s1 = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double s2 = (b - a) / 12.0 * (fa + 4.0 * flm + 2.0 * fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(s2 - s1) < 15.0 * eps) return s2 + (s2 - s1) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, eps / 2, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, eps / 2, depth - 1);
}

template <typename F>
double integrate(F&& f, double a, double b, double eps = 1e-11) {
  return simpson_rec(f, a, b, f(a), f(0.5 * (a + b)), f(b), eps, 30);
}

const DimensionlessProblem kSlab = DimensionlessProblem::make_slab(1.0, 0.1);

const PlanarSeries& reference_series() {
  static const PlanarSeries series = PlanarSeries::build(kSlab, 30);
  return series;
}

}  // namespace

TEST_CASE("steady profile closed-form values") {
  const auto [u0, v0] = steady_profile(0.0, 1.0);
  const auto [ub, vb] = steady_profile(1.0, 1.0);
  CHECK(u0 == doctest::Approx((3.0 + 2.0 * kSqrt3) / (3.0 + 4.0 * kSqrt3)).epsilon(1e-15));
  CHECK(ub == doctest::Approx(2.0 * kSqrt3 / (3.0 + 4.0 * kSqrt3)).epsilon(1e-15));
  CHECK(u0 == doctest::Approx(0.65109).epsilon(1e-4));
  CHECK(ub == doctest::Approx(0.34891).epsilon(1e-4));
  CHECK(u0 + ub == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(u0 == v0);
  CHECK(vb == ub);

  // Linear slope and exact integral b/2.
  const double slope = (steady_profile(0.6, 1.0).first - steady_profile(0.4, 1.0).first) / 0.2;
  CHECK(slope == doctest::Approx(-3.0 / (3.0 + 4.0 * kSqrt3)).epsilon(1e-12));
  CHECK(slope == doctest::Approx(-0.30217).epsilon(1e-4));
  const double integral = integrate([](double x) { return steady_profile(x, 1.0).first; }, 0.0, 1.0);
  CHECK(integral == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(steady_profile(-0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(steady_profile(1.5, 1.0), std::invalid_argument);
}

TEST_CASE("series weights pair u and v modes") {
  const auto& series = reference_series();
  REQUIRE(series.poles_per_root() == 2);
  REQUIRE(series.terms().size() == 60);
  for (const auto& t : series.terms()) {
    CHECK(t.weight_v == doctest::Approx(t.weight_u / (t.s + 1.0)).epsilon(1e-15));
    CHECK(t.s < 0.0);
  }
  // All mode exponents negative: the series decays to the steady profile.
  const Fields late = evaluate_fields(series, 0.25, 200.0);
  CHECK(late.u == doctest::Approx(steady_profile(0.25, 1.0).first).epsilon(1e-14));
}

TEST_CASE("boundary conditions hold mode-by-mode") {
  // Each mode satisfies both Robin conditions exactly (the determinant is
  // zero at the eigenvalues), so truncation never pollutes the residuals.
  const auto& series = reference_series();
  for (double tau : {0.01, 0.1, 1.0, 10.0}) {
    const Fields u0 = evaluate_fields(series, 0.0, tau);
    const Gradients g0 = evaluate_gradients(series, 0.0, tau);
    const Fields ub = evaluate_fields(series, 1.0, tau);
    const Gradients gb = evaluate_gradients(series, 1.0, tau);
    CHECK(std::abs(u0.u - (2.0 / kSqrt3) * g0.du_dx - 1.0) <= 1e-10);
    CHECK(std::abs(ub.u + (2.0 / kSqrt3) * gb.du_dx) <= 1e-10);
  }
}

TEST_CASE("gradients agree with a centered difference of the fields") {
  const auto& series = reference_series();
  const double h = 1e-5;
  for (double tau : {0.1, 1.0}) {
    for (double x : {0.2, 0.5, 0.8}) {
      const Gradients g = evaluate_gradients(series, x, tau);
      const double fd_u = (evaluate_fields(series, x + h, tau).u -
                           evaluate_fields(series, x - h, tau).u) /
                          (2.0 * h);
      const double fd_v = (evaluate_fields(series, x + h, tau).v -
                           evaluate_fields(series, x - h, tau).v) /
                          (2.0 * h);
      CHECK(g.du_dx == doctest::Approx(fd_u).epsilon(1e-8));
      CHECK(g.dv_dx == doctest::Approx(fd_v).epsilon(1e-8));
    }
  }
}

TEST_CASE("gradient endpoints and late-time limit") {
  const auto& series = reference_series();
  // At late time the slope is uniform: -3/(3b + 4 sqrt 3).
  for (double x : {0.0, 0.5, 1.0}) {
    CHECK(evaluate_gradients(series, x, 50.0).du_dx ==
          doctest::Approx(-0.30217).epsilon(1e-4));
  }
  // Early on the gradient is much steeper at the irradiated face.
  const Gradients left = evaluate_gradients(series, 0.0, 0.01);
  const Gradients right = evaluate_gradients(series, 1.0, 0.01);
  CHECK(left.du_dx < 0.0);
  CHECK(std::abs(left.du_dx) > 5.0 * std::abs(right.du_dx));
}

TEST_CASE("leakage currents: boundary identities and saturation") {
  const auto& series = reference_series();
  // The Robin conditions tie the currents to the face values exactly:
  // J- = 2 u(0) - 1 and J+ = 2 u(b), including for truncated series.
  for (double tau : {0.05, 0.5, 5.0}) {
    const Currents cur = leakage_currents(series, tau);
    const double u0 = evaluate_fields(series, 0.0, tau).u;
    const double ub = evaluate_fields(series, 1.0, tau).u;
    CHECK(cur.j_minus == doctest::Approx(2.0 * u0 - 1.0).epsilon(1e-10));
    CHECK(cur.j_plus == doctest::Approx(2.0 * ub).epsilon(1e-10));
  }
  // The far face sees no flux at first, then saturates at 4 sqrt(3)/(3b + 4 sqrt 3).
  CHECK(std::abs(leakage_currents(series, 0.0).j_plus) < 3e-4);
  const Currents late = leakage_currents(series, 50.0);
  CHECK(late.j_plus == doctest::Approx(0.6978).epsilon(1e-3));
  CHECK(late.j_minus == doctest::Approx(0.30217).epsilon(1e-3));
  CHECK(late.j_minus + late.j_plus == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("integrated densities match adaptive quadrature") {
  const auto& series = reference_series();
  for (double tau : {0.1, 1.0, 10.0}) {
    const PlanarIntegrals psi = integrated_densities(series, tau);
    const double qr = integrate(
        [&](double x) { return evaluate_fields(series, x, tau).u; }, 0.0, 1.0);
    const double qm = integrate(
        [&](double x) { return evaluate_fields(series, x, tau).v; }, 0.0, 1.0);
    CHECK(psi.psi_r == doctest::Approx(qr).epsilon(1e-8));
    CHECK(psi.psi_m == doctest::Approx(qm).epsilon(1e-8));
  }
  const PlanarIntegrals late = integrated_densities(series, 50.0);
  CHECK(late.psi_r == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(late.psi_m == doctest::Approx(0.5).epsilon(1e-9));
  // Material energy lags the radiation field.
  for (double tau : {0.01, 0.1, 0.5}) {
    const PlanarIntegrals psi = integrated_densities(series, tau);
    CHECK(psi.psi_m <= psi.psi_r + psi.tol + 1e-12);
  }
}

TEST_CASE("energy balance identity cancels to roundoff") {
  const auto& series = reference_series();
  for (double tau : {0.1, 1.0}) {
    CHECK(std::abs(energy_balance_residual(series, tau)) <= 1e-10);
  }
  CHECK_THROWS_AS(energy_balance_residual(series, 0.0), std::invalid_argument);
}

TEST_CASE("fields are monotone in time and the material field lags") {
  const auto& series = reference_series();
  const std::vector<double> taus = {0.01, 0.1, 0.5, 1.0, 2.5, 5.0, 10.0, 50.0};
  for (double x : {0.0, 0.3, 0.6, 1.0}) {
    double prev_u = -1.0, prev_v = -1.0, prev_tol = 0.0;
    for (double tau : taus) {
      const Fields f = evaluate_fields(series, x, tau);
      CHECK(f.u >= prev_u - (f.tol + prev_tol + 1e-12));
      CHECK(f.v >= prev_v - (f.tol + prev_tol + 1e-12));
      CHECK(f.v <= f.u + f.tol + 1e-12);
      prev_u = f.u;
      prev_v = f.v;
      prev_tol = f.tol;
    }
  }
}

TEST_CASE("initial condition is recovered by the series limit") {
  const auto& series = reference_series();
  // Away from the irradiated corner the truncated series vanishes at tau = 0
  // within its own reported tolerance.
  for (double x : {0.35, 0.55, 0.75, 0.95, 1.0}) {
    const Fields f = evaluate_fields(series, x, 0.0);
    CHECK(std::abs(f.u) <= f.tol + 1e-12);
    CHECK(std::abs(f.v) <= f.tol + 1e-12);
  }
  // Near the irradiated face the tail of the mode sum has one sign (the
  // corner where the boundary flux switches on), so convergence is harmonic
  // ~ 0.18/n there and the two-term bound undershoots. Check the analytic
  // tail estimate instead.
  for (double x : {0.0, 0.15}) {
    const Fields corner = evaluate_fields(series, x, 0.0);
    CHECK(std::abs(corner.u) <= 0.25 / 30.0);
    CHECK(std::abs(corner.v) <= 0.25 / 30.0);
  }
}

TEST_CASE("series values sit inside the physical envelope") {
  const auto& series = reference_series();
  for (double tau : {0.01, 0.1, 1.0, 10.0}) {
    for (int i = 0; i <= 20; ++i) {
      const double x = i / 20.0;
      const Fields f = evaluate_fields(series, x, tau);
      CHECK(f.u >= -f.tol - 1e-9);
      CHECK(f.u <= 1.0 + f.tol + 1e-9);
      CHECK(f.v >= -f.tol - 1e-9);
      CHECK(f.v <= 1.0 + f.tol + 1e-9);
    }
  }
}

TEST_CASE("pde residual of the series vanishes at second order") {
  // The material field is evaluated with its slow tail folded into the
  // steady term, which leaves a truncation-level offset (not an h effect)
  // in the mixed radiation-equation residual. A deep truncation pushes that
  // floor below the stencil error so the h^2 decay is observable.
  const PlanarSeries series = PlanarSeries::build(kSlab, 150);
  const double x0 = 0.4, tau0 = 1.0;
  auto residual = [&](double h) {
    const double ut = (evaluate_fields(series, x0, tau0 + h).u -
                       evaluate_fields(series, x0, tau0 - h).u) /
                      (2.0 * h);
    const double uxx = (evaluate_fields(series, x0 + h, tau0).u -
                        2.0 * evaluate_fields(series, x0, tau0).u +
                        evaluate_fields(series, x0 - h, tau0).u) /
                       (h * h);
    const Fields f = evaluate_fields(series, x0, tau0);
    return 0.1 * ut - uxx - f.v + f.u;
  };
  const double r1 = std::abs(residual(0.04));
  const double r2 = std::abs(residual(0.02));
  CHECK(r2 < 0.5 * r1);          // at least first-order decrease observed
  CHECK(r2 <= 0.35 * r1 + 1e-9); // consistent with O(h^2)
  // Material equation: dv/dtau = u - v, same stencil.
  auto residual_v = [&](double h) {
    const double vt = (evaluate_fields(series, x0, tau0 + h).v -
                       evaluate_fields(series, x0, tau0 - h).v) /
                      (2.0 * h);
    const Fields f = evaluate_fields(series, x0, tau0);
    return vt - f.u + f.v;
  };
  CHECK(std::abs(residual_v(0.01)) <= 4.0 * std::abs(residual_v(0.02)) + 1e-12);
  CHECK(std::abs(residual_v(0.005)) < 1e-4);
}

TEST_CASE("no-retardation branch: closed-form initial profile") {
  CHECK(eps0_initial_profile(0.0, 1.0) == doctest::Approx(0.4689).epsilon(1e-3));
  // Both Robin conditions hold exactly for the closed form.
  const double h = 1e-6;
  for (double b : {0.5, 1.0, 2.0}) {
    const double u0 = eps0_initial_profile(0.0, b);
    const double du0 = (eps0_initial_profile(h, b) - u0) / h;
    CHECK(std::abs(u0 - (2.0 / kSqrt3) * du0 - 1.0) <= 1e-6);  // fd-limited
    const double ub = eps0_initial_profile(b, b);
    const double dub = (ub - eps0_initial_profile(b - h, b)) / h;
    CHECK(std::abs(ub + (2.0 / kSqrt3) * dub) <= 1e-6);
  }
  // Exact algebraic check of the left condition via hyperbolic identities:
  // numerator(0) + (2/sqrt3) * d/dx numerator(0) telescopes to the denominator.
  const double b = 1.0;
  const double num0 = 3.0 * std::sinh(b) + 2.0 * kSqrt3 * std::cosh(b);
  const double dnum0 = -(3.0 * std::cosh(b) + 2.0 * kSqrt3 * std::sinh(b));
  const double den = 7.0 * std::sinh(b) + 4.0 * kSqrt3 * std::cosh(b);
  CHECK(num0 - (2.0 / kSqrt3) * dnum0 == doctest::Approx(den).epsilon(1e-14));
}

TEST_CASE("no-retardation branch: series limit reproduces the profile") {
  const auto slab0 = DimensionlessProblem::make_slab(1.0, 0.0);
  const PlanarSeries series = PlanarSeries::build(slab0, 100);
  REQUIRE(series.poles_per_root() == 1);
  for (int i = 0; i <= 10; ++i) {
    const double x = i / 10.0;
    const Fields f = evaluate_fields(series, x, 1e-6);
    CHECK(f.u == doctest::Approx(eps0_initial_profile(x, 1.0)).epsilon(2e-3));
    if (i > 0) CHECK(std::abs(f.v) <= 1e-3);
  }
  // The material field inherits the irradiated-corner tail at x = 0:
  // ~0.18/n with 100 roots. Documented bound rather than the generic one.
  CHECK(std::abs(evaluate_fields(series, 0.0, 1e-6).v) <= 0.25 / 100.0);
}

TEST_CASE("series agrees with the numerical transform inversion") {
  const auto& series = reference_series();
  for (double tau : {0.1, 1.0}) {
    for (double x : {0.0, 0.5, 1.0}) {
      const Fields f = evaluate_fields(series, x, tau);
      const InversionResult inv = invert_numerically(x, tau, kSlab, 14);
      CHECK(std::abs(f.u - inv.u) <= 1e-5);
      CHECK(std::abs(f.v - inv.v) <= 1e-5);
    }
  }
  // Larger tau needs more terms: the inverter's own truncation dominates.
  for (double x : {0.0, 0.5, 1.0}) {
    const Fields f10 = evaluate_fields(series, x, 10.0);
    const InversionResult inv10 = invert_numerically(x, 10.0, kSlab, 16);
    CHECK(std::abs(f10.u - inv10.u) <= 1e-5);
    CHECK(std::abs(f10.v - inv10.v) <= 1e-5);
  }
}

TEST_CASE("evaluation rejects out-of-domain arguments") {
  const auto& series = reference_series();
  CHECK_THROWS_AS(evaluate_fields(series, -0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_fields(series, 1.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_fields(series, 0.5, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(PlanarSeries::build(DimensionlessProblem::make_shell(1.0, 2.0, 0.1), 5),
                  std::invalid_argument);
}

TEST_CASE("snapshot evaluation covers the grid") {
  const auto& series = reference_series();
  std::vector<double> xs;
  for (int i = 0; i <= 10; ++i) xs.push_back(i / 10.0);
  const FieldSnapshot snap = evaluate_snapshot(series, xs, 2.5);
  REQUIRE(snap.u.size() == xs.size());
  CHECK(snap.tau == 2.5);
  CHECK(snap.u.front() == doctest::Approx(evaluate_fields(series, 0.0, 2.5).u));
  CHECK(snap.dv_dx.back() ==
        doctest::Approx(evaluate_gradients(series, 1.0, 2.5).dv_dx));
}
