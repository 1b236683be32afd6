#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "wavecomp/burgers.hpp"
#include "wavecomp/riemann.hpp"

using namespace wavecomp;

TEST_CASE("fan solves the Burgers equation") {
  BurgersFan f(-1.3, -0.4);

  // Far-field limits and monotonicity.
  CHECK(f.value(-50.0, 3.0) == doctest::Approx(-1.3).epsilon(1e-12));
  CHECK(f.value(50.0, 3.0) == doctest::Approx(-0.4).epsilon(1e-12));
  double prev = -2.0;
  for (double x = -30.0; x <= 30.0; x += 0.25) {
    const double w = f.value(x, 7.0);
    CHECK(w >= prev);
    prev = w;
  }

  // Characteristics are exact: w(x0 + w0(x0) t, t) = w0(x0).
  for (double x0 : {-3.0, -0.5, 0.0, 1.7}) {
    const double w0 = f.value(x0, 0.0);
    CHECK(f.value(x0 + w0 * 12.0, 12.0) == doctest::Approx(w0).epsilon(1e-12));
  }

  // PDE residual w_t + w w_x = 0 via centered differences.
  const double h = 1e-4;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = -12.0 + 24.0 * i / 999.0, t = 2.5;
    const double wt = (f.value(x, t + h) - f.value(x, t - h)) / (2 * h);
    const double wx = (f.value(x + h, t) - f.value(x - h, t)) / (2 * h);
    worst = std::max(worst, std::abs(wt + f.value(x, t) * wx));
  }
  CHECK(worst < 1e-6);

  // Analytic derivatives match finite differences.
  for (double x : {-4.0, -1.0, 0.3, 2.0}) {
    const double t = 5.0;
    CHECK(f.dx(x, t) ==
          doctest::Approx((f.value(x + h, t) - f.value(x - h, t)) / (2 * h))
              .epsilon(1e-8));
    CHECK(f.dt(x, t) ==
          doctest::Approx((f.value(x, t + h) - f.value(x, t - h)) / (2 * h))
              .epsilon(1e-8));
    CHECK(f.dxx(x, t) == doctest::Approx((f.value(x + h, t) - 2 * f.value(x, t) +
                                          f.value(x - h, t)) /
                                         (h * h))
                             .epsilon(1e-5));
  }

  CHECK_THROWS_AS(f.value(0.0, -0.1), DomainError);
  CHECK_THROWS_AS(BurgersFan(1.0, 0.5), DomainError);

  BurgersFan d(0.7, 0.7);
  CHECK(d.degenerate());
  CHECK(d.value(3.0, 9.0) == 0.7);
  CHECK(d.dx(3.0, 9.0) == 0.0);
}

namespace {

struct PatternFixture {
  GasParams g;
  WavePattern w;
  PatternFixture() {
    ThermoState left{1.0, 0.0, 1.0};
    const ThermoState right = right_state_for_delta(g, left, 0.12);
    w = solve_pattern(g, left, right);
  }
};

}  // namespace

TEST_CASE_FIXTURE(PatternFixture, "rarefaction fields ride the isentrope") {
  const RarefactionWave r1(g, 1, w.mid_left, w.left);
  const RarefactionWave r3(g, 3, w.mid_right, w.right);

  for (const RarefactionWave* r : {&r1, &r3}) {
    for (double t : {0.0, 1.0, 9.0}) {
      const double xm = 0.5 * (r->fan().w_minus() + r->fan().w_plus()) * t;
      for (double dx_ : {-6.0, -1.2, 0.0, 0.9, 4.4}) {
        const double x = xm + dx_;
        // Speed consistency: lambda(V) = w exactly.
        CHECK(lambda_isentrope(g.gamma, r->K(), r->family(), r->v(x, t)) ==
              doctest::Approx(r->w(x, t)).epsilon(1e-10));
        // Entropy is uniform.
        CHECK(g.R * r->theta(x, t) / r->v(x, t) * std::pow(r->v(x, t), g.gamma) ==
              doctest::Approx(r->K()).epsilon(1e-12));
        // Expansive velocity field.
        CHECK(r->u_x(x, t) >= 0.0);
        // Velocity sits on the integral curve through the anchor.
        const ThermoState on_curve = rarefaction_connect(
            g, r->family(), r->family() == 1 ? w.mid_left : w.mid_right,
            r->v(x, t), CurveMode::curve);
        CHECK(r->u(x, t) == doctest::Approx(on_curve.u).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE_FIXTURE(PatternFixture, "rarefaction satisfies the inviscid system") {
  const RarefactionWave r1(g, 1, w.mid_left, w.left);
  for (double t : {0.5, 4.0}) {
    for (double x : {-3.0, -0.8, 0.4, 2.1}) {
      // Exact closure identities between the analytic members.
      CHECK(r1.v_t(x, t) == doctest::Approx(r1.u_x(x, t)).epsilon(1e-12));
      const double p = g.R * r1.theta(x, t) / r1.v(x, t);
      const double px = g.R * (r1.theta_x(x, t) * r1.v(x, t) -
                               r1.theta(x, t) * r1.v_x(x, t)) /
                        (r1.v(x, t) * r1.v(x, t));
      CHECK(r1.u_t(x, t) == doctest::Approx(-px).epsilon(1e-11));
      CHECK(g.R / (g.gamma - 1) * r1.theta_t(x, t) ==
            doctest::Approx(-p * r1.u_x(x, t)).epsilon(1e-11));

      // Analytic derivatives vs finite differences of the fields.
      const double h = 1e-4;
      CHECK(r1.v_x(x, t) ==
            doctest::Approx((r1.v(x + h, t) - r1.v(x - h, t)) / (2 * h))
                .epsilon(1e-7));
      CHECK(r1.theta_t(x, t) ==
            doctest::Approx((r1.theta(x, t + h) - r1.theta(x, t - h)) / (2 * h))
                .epsilon(1e-7));
      CHECK(r1.u_xx(x, t) ==
            doctest::Approx((r1.u(x + h, t) - 2 * r1.u(x, t) + r1.u(x - h, t)) /
                            (h * h))
                .epsilon(1e-4));
      CHECK(r1.v_xx(x, t) ==
            doctest::Approx((r1.v(x + h, t) - 2 * r1.v(x, t) + r1.v(x - h, t)) /
                            (h * h))
                .epsilon(1e-4));
      CHECK(r1.theta_xx(x, t) ==
            doctest::Approx((r1.theta(x + h, t) - 2 * r1.theta(x, t) +
                             r1.theta(x - h, t)) /
                            (h * h))
                .epsilon(1e-4));
    }
  }
}

TEST_CASE_FIXTURE(PatternFixture, "fan gradient decays like 1/t") {
  const RarefactionWave r3(g, 3, w.mid_right, w.right);
  // w_x = w0'/(1 + w0' t) <= min(sup w0', 1/t), so sup u_x is bounded by
  // 2 V_max/(gamma+1) * min(sup w0', 1/t) and decays once t > 1/sup w0'.
  const double slope0 = 0.5 * (r3.fan().w_plus() - r3.fan().w_minus());
  const double v_max =
      std::max(r3.v(-1e6, 0.0), r3.v(1e6, 0.0));  // endpoint volumes
  double prev_sup = 1e300;
  for (double t : {1.0, 3.0, 10.0, 30.0, 100.0, 300.0}) {
    double sup = 0.0;
    const double xm = 0.5 * (r3.fan().w_minus() + r3.fan().w_plus()) * t;
    for (int i = 0; i <= 400; ++i) {
      const double x = xm - 0.6 * t - 20.0 + (1.2 * t + 40.0) * i / 400.0;
      sup = std::max(sup, r3.u_x(x, t));
    }
    const double bound =
        2.0 * v_max / (g.gamma + 1.0) * std::min(slope0, 1.0 / t);
    CHECK(sup <= bound * (1.0 + 1e-9));
    CHECK(sup <= prev_sup);
    prev_sup = sup;
  }
  // Late-time asymptote: sup u_x * t -> 2 V_max/(gamma+1) from below.
  CHECK(prev_sup * 300.0 > 0.5 * 2.0 * v_max / (g.gamma + 1.0));
}

TEST_CASE_FIXTURE(PatternFixture, "degenerate and invalid wave construction") {
  // Zero-strength wave: anchor equals far.
  const RarefactionWave r(g, 1, w.mid_left, w.mid_left);
  CHECK(r.fan().degenerate());
  CHECK(r.v(2.0, 5.0) == w.mid_left.v);
  CHECK(r.u_x(2.0, 5.0) == 0.0);
  CHECK(r.theta_t(2.0, 5.0) == 0.0);

  // Off-isentrope far state.
  ThermoState bad = w.left;
  bad.theta *= 1.5;
  CHECK_THROWS_AS(RarefactionWave(g, 1, w.mid_left, bad), DomainError);

  // Compressive orientation.
  CHECK_THROWS_AS(RarefactionWave(g, 1, w.left, w.mid_left), DomainError);

  // Velocity off the curve.
  ThermoState shifted = w.left;
  shifted.u += 0.1;
  CHECK_THROWS_AS(RarefactionWave(g, 1, w.mid_left, shifted), DomainError);
}
