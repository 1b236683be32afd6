#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "wavecomp/composite.hpp"

using namespace wavecomp;

namespace {

CompositeWave make_wave(double delta) {
  GasParams g;
  const ThermoState left{1.0, 0.0, 1.0};
  return CompositeWave(g, left, right_state_for_delta(g, left, delta));
}

}  // namespace

TEST_CASE("composite reproduces the end states in the far field") {
  const CompositeWave cw = make_wave(0.12);
  const ThermoState& l = cw.pattern().left;
  const ThermoState& r = cw.pattern().right;
  for (double t : {0.0, 2.0, 20.0}) {
    const double X = 250.0 + 2.0 * t;
    CHECK(cw.v(-X, t) == doctest::Approx(l.v).epsilon(1e-10));
    CHECK(cw.u(-X, t) == doctest::Approx(l.u).epsilon(1e-10));
    CHECK(cw.theta(-X, t) == doctest::Approx(l.theta).epsilon(1e-10));
    CHECK(cw.v(X, t) == doctest::Approx(r.v).epsilon(1e-10));
    CHECK(cw.u(X, t) == doctest::Approx(r.u).epsilon(1e-10));
    CHECK(cw.theta(X, t) == doctest::Approx(r.theta).epsilon(1e-10));
  }
}

TEST_CASE("composite satisfies mass exactly and matches finite differences") {
  const CompositeWave cw = make_wave(0.12);
  const double h = 1e-4;
  for (double t : {0.5, 6.0}) {
    for (double x : {-8.0, -1.5, 0.0, 2.2, 9.0}) {
      CHECK(cw.v_t(x, t) == doctest::Approx(cw.u_x(x, t)).epsilon(1e-12));
      CHECK(cw.v_x(x, t) ==
            doctest::Approx((cw.v(x + h, t) - cw.v(x - h, t)) / (2 * h))
                .epsilon(1e-7));
      CHECK(cw.theta_x(x, t) ==
            doctest::Approx((cw.theta(x + h, t) - cw.theta(x - h, t)) / (2 * h))
                .epsilon(1e-7));
      CHECK(cw.u_t(x, t) ==
            doctest::Approx((cw.u(x, t + h) - cw.u(x, t - h)) / (2 * h))
                .epsilon(1e-7));
      CHECK(cw.u_xx(x, t) ==
            doctest::Approx((cw.u(x + h, t) - 2 * cw.u(x, t) + cw.u(x - h, t)) /
                            (h * h))
                .epsilon(1e-4));
      CHECK(cw.theta_xx(x, t) ==
            doctest::Approx((cw.theta(x + h, t) - 2 * cw.theta(x, t) +
                             cw.theta(x - h, t)) /
                            (h * h))
                .epsilon(1e-4));
    }
  }
}

TEST_CASE("system defect of the composite is small and decays") {
  const CompositeWave cw = make_wave(0.12);
  auto sup_residuals = [&](double t) {
    double mom = 0.0, en = 0.0, vmin = 1e300, thmin = 1e300;
    const double X = 150.0 + 1.5 * t;
    for (int i = 0; i <= 1200; ++i) {
      const double x = -X + 2.0 * X * i / 1200.0;
      mom = std::max(mom, std::abs(cw.momentum_residual(x, t)));
      en = std::max(en, std::abs(cw.energy_residual(x, t)));
      vmin = std::min(vmin, cw.v(x, t));
      thmin = std::min(thmin, cw.theta(x, t));
    }
    CHECK(vmin > 0.0);
    CHECK(thmin > 0.0);
    return std::pair{mom, en};
  };
  const auto [mom10, en10] = sup_residuals(10.0);
  const auto [mom80, en80] = sup_residuals(80.0);
  CHECK(mom10 < 5e-2);
  CHECK(en10 < 5e-2);
  CHECK(mom80 < 0.5 * mom10);
  CHECK(en80 < 0.5 * en10);
}

TEST_CASE("pure contact pattern collapses onto the contact wave") {
  GasParams g;
  const ThermoState left{1.0, 0.0, 1.0};
  const ThermoState right{1.2, 0.0, 1.2};  // same pressure, same velocity
  const CompositeWave cw(g, left, right);
  CHECK(cw.pattern().contact_only);
  for (double t : {0.0, 5.0}) {
    for (double x : {-12.0, -0.7, 0.0, 3.1}) {
      CHECK(cw.v(x, t) == doctest::Approx(cw.contact().v(x, t)).epsilon(1e-9));
      CHECK(cw.u(x, t) == doctest::Approx(cw.contact().u(x, t)).epsilon(1e-9));
      CHECK(cw.theta(x, t) ==
            doctest::Approx(cw.contact().theta(x, t)).epsilon(1e-9));
    }
  }
}
