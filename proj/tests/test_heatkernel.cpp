#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "wavecomp/error.hpp"
#include "wavecomp/heatkernel.hpp"
#include "wavecomp/quad.hpp"
#include "wavecomp/riemann.hpp"

using namespace wavecomp;

TEST_CASE("antiderivative closed form matches quadrature and its sup norm") {
  for (double sigma : {0.05, 0.1, 0.25}) {
    HeatKernelWeight hk(sigma);
    for (double t : {0.0, 3.0}) {
      const double s = 1.0 + t;
      const double lo = -40.0 * std::sqrt(s / sigma);
      for (double x : {-1.5, 0.0, 0.8, 6.0}) {
        const double quad =
            integrate([&](double y) { return hk.w(y, t); }, lo, x);
        CHECK(quad == doctest::Approx(hk.g(x, t)).epsilon(1e-10));
      }
      // the full-line mass is the time-independent sup of g
      const double full =
          integrate([&](double y) { return hk.w(y, t); }, lo, -lo);
      CHECK(full == doctest::Approx(std::sqrt(M_PI / sigma)).epsilon(1e-6));
      CHECK(hk.g_sup() == doctest::Approx(std::sqrt(M_PI / sigma)).epsilon(1e-12));
      CHECK(hk.g(1e4, t) <= hk.g_sup() + 1e-12);
      CHECK(hk.g(-1e4, t) >= 0.0);
    }
  }
  CHECK_THROWS_AS(HeatKernelWeight(0.0), DomainError);
  CHECK_THROWS_AS(HeatKernelWeight(-0.2), DomainError);
}

TEST_CASE("time derivatives of the pair reduce to space derivatives") {
  HeatKernelWeight hk(0.1);
  const double s4 = 4.0 * hk.sigma();
  // analytic identities hold pointwise
  for (double t : {0.0, 0.7, 5.0}) {
    for (double x : {-3.0, -0.4, 0.0, 1.1, 4.5}) {
      CHECK(s4 * hk.g_t(x, t) == doctest::Approx(hk.w_x(x, t)).epsilon(1e-14));
      CHECK(s4 * hk.w_t(x, t) == doctest::Approx(hk.w_xx(x, t)).epsilon(1e-14));
    }
  }
  // centered differences converge to them at second order
  auto max_err = [&](double h) {
    double worst = 0.0;
    for (double t : {0.5, 2.0}) {
      for (double x : {-2.0, 0.3, 1.7}) {
        const double gt = (hk.g(x, t + h) - hk.g(x, t - h)) / (2.0 * h);
        const double wt = (hk.w(x, t + h) - hk.w(x, t - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(s4 * gt - hk.w_x(x, t)));
        worst = std::max(worst, std::abs(s4 * wt - hk.w_xx(x, t)));
      }
    }
    return worst;
  };
  const double e1 = max_err(1e-2);
  const double e2 = max_err(5e-3);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));  // O(h^2)
  CHECK(max_err(1e-4) < 1e-6);
}

TEST_CASE("weighted square estimate holds for a decaying sample field") {
  HeatKernelWeight hk(0.1);
  const int nx = 801, nt = 41;
  std::vector<double> x(nx), t(nt);
  for (int i = 0; i < nx; ++i) x[i] = -20.0 + 40.0 * i / (nx - 1);
  for (int k = 0; k < nt; ++k) t[k] = 8.0 * k / (nt - 1);
  auto sample = [&](auto&& f) {
    std::vector<std::vector<double>> h(nt, std::vector<double>(nx));
    for (int k = 0; k < nt; ++k)
      for (int i = 0; i < nx; ++i) h[k][i] = f(x[i], t[k]);
    return h;
  };

  // decaying pulse: every term finite, inequality strict
  auto h1 = sample([](double xx, double tt) {
    return std::exp(-tt) * std::exp(-0.25 * xx * xx) * (1.0 + 0.3 * xx);
  });
  const DualityReport r1 = weighted_square_integral(hk, t, x, h1);
  CHECK(r1.lhs > 0.0);
  CHECK(r1.term_h0 > 0.0);
  CHECK(r1.term_hx > 0.0);
  CHECK(std::isfinite(r1.term_dual));
  CHECK(r1.rhs == doctest::Approx(r1.term_h0 + r1.term_hx + r1.term_dual));
  CHECK(r1.slack == doctest::Approx(r1.rhs - r1.lhs));
  CHECK(r1.lhs <= r1.rhs);

  // steady field: duality term vanishes, estimate reduces to mass + slope
  auto h2 = sample([](double xx, double) { return std::exp(-0.5 * xx * xx); });
  const DualityReport r2 = weighted_square_integral(hk, t, x, h2);
  CHECK(std::abs(r2.term_dual) < 1e-12 * r2.term_h0);
  CHECK(r2.lhs <= r2.rhs);
  // lhs of the steady field is computable in closed form:
  //   int h^2 w^2 dx = sqrt(pi) / sqrt(1 + s') with gaussian exponents
  //   1 + 2 sigma / (1+t); spot check the first snapshot's integrand mass
  const double a = 1.0 + 2.0 * hk.sigma();  // t = 0
  const double first = std::sqrt(M_PI / a);
  double num = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double wi = hk.w(x[i], 0.0);
    const double f = h2[0][i] * h2[0][i] * wi * wi;
    num += ((i == 0 || i == nx - 1) ? 0.5 : 1.0) * f;
  }
  num *= x[1] - x[0];
  CHECK(num == doctest::Approx(first).epsilon(1e-8));

  // the zero field gives zero on both sides
  auto h0 = sample([](double, double) { return 0.0; });
  const DualityReport r0 = weighted_square_integral(hk, t, x, h0);
  CHECK(r0.lhs == 0.0);
  CHECK(r0.rhs == 0.0);

  // time oscillation at the snapshot Nyquist rate trips the resolution guard
  {
    std::vector<double> tt(9);
    for (int k = 0; k < 9; ++k) tt[k] = 0.25 * k;
    std::vector<std::vector<double>> hh(9, std::vector<double>(x.size()));
    for (int k = 0; k < 9; ++k) {
      const double a = std::sin(M_PI * 0.5 * k);
      for (std::size_t i = 0; i < x.size(); ++i)
        hh[k][i] = a * a * std::exp(-x[i] * x[i]);
    }
    CHECK_THROWS_AS(weighted_square_integral(hk, tt, x, hh), ResolutionError);
    CHECK_NOTHROW(weighted_square_integral(hk, tt, x, hh, false));
  }

  // malformed inputs are rejected
  CHECK_THROWS_AS(weighted_square_integral(hk, {0.0}, x, {h1[0]}), DomainError);
  CHECK_THROWS_AS(weighted_square_integral(hk, {0.0, 0.0}, x, {h1[0], h1[1]}),
                  DomainError);
  std::vector<double> bad_x = {0.0, 1.0, 3.0};
  CHECK_THROWS_AS(weighted_square_integral(
                      hk, {0.0, 1.0}, bad_x,
                      {{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}}),
                  DomainError);
  CHECK_THROWS_AS(weighted_square_integral(hk, {0.0, 1.0}, x, {h1[0], {1.0}}),
                  DomainError);
}

TEST_CASE("width admissibility against the contact tail rate") {
  CHECK(HeatKernelWeight(0.1).admissible_for(0.4));
  CHECK(HeatKernelWeight(0.1).admissible_for(0.4000000001));
  CHECK_FALSE(HeatKernelWeight(0.25).admissible_for(0.4));
  CHECK(HeatKernelWeight(0.25).admissible_for(1.0));
}

TEST_CASE("space-time partition opens along half the fan tail speeds") {
  GasParams g;
  ThermoState left{1.0, 0.0, 1.0};
  const ThermoState right = right_state_for_delta(g, left, 0.1);
  const WavePattern pat = solve_pattern(g, left, right);
  const double lam_m = lambda_isentrope(g.gamma, pat.K_left, 1, pat.mid_left.v);
  const double lam_p = lambda_isentrope(g.gamma, pat.K_right, 3, pat.mid_right.v);
  CHECK(lam_m < 0.0);
  CHECK(lam_p > 0.0);

  const double t = 4.0;
  CHECK(classify_region(g, pat, 0.51 * lam_m * t, t) == Region::minus_far);
  CHECK(classify_region(g, pat, 0.49 * lam_m * t, t) == Region::contact_zone);
  CHECK(classify_region(g, pat, 0.0, t) == Region::contact_zone);
  CHECK(classify_region(g, pat, 0.49 * lam_p * t, t) == Region::contact_zone);
  CHECK(classify_region(g, pat, 0.51 * lam_p * t, t) == Region::plus_far);
  // boundaries belong to the contact zone
  CHECK(classify_region(g, pat, 0.5 * lam_p * t, t) == Region::contact_zone);
  // at t = 0 only the origin-centred zone degenerates to a single point
  CHECK(classify_region(g, pat, -1e-9, 0.0) == Region::minus_far);
  CHECK(classify_region(g, pat, 0.0, 0.0) == Region::contact_zone);
  CHECK(classify_region(g, pat, 1e-9, 0.0) == Region::plus_far);
}
