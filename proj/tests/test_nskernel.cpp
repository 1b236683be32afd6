#include <cmath>
#include <vector>

#include "doctest.h"
#include "wavecomp/nskernel.hpp"
#include "wavecomp/torus.hpp"

using namespace wavecomp;

namespace {

struct Fields {
  std::vector<double> v, u, th;
};

Fields smooth_periodic(int n) {
  Fields f;
  f.v.resize(n);
  f.u.resize(n);
  f.th.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) / n;
    f.v[i] = 1.0 + 0.05 * std::sin(2 * M_PI * x);
    f.u[i] = 0.02 * std::cos(2 * M_PI * x) + 0.01 * std::sin(4 * M_PI * x);
    f.th[i] = 1.0 + 0.03 * std::cos(2 * M_PI * x);
  }
  return f;
}

NsSolver make_periodic(int n, TimeScheme s) {
  SolverOptions o;
  o.scheme = s;
  NsSolver solver(GasParams{}, 0.0, 1.0 / n, n, o);
  const Fields f = smooth_periodic(n);
  solver.set_initial(f.v, f.u, f.th);
  return solver;
}

}  // namespace

TEST_CASE("constant states are fixed points of both schemes") {
  for (TimeScheme s : {TimeScheme::explicit_rk2, TimeScheme::strang_cn}) {
    SolverOptions o;
    o.scheme = s;
    NsSolver solver(GasParams{}, 0.0, 1.0 / 32, 32, o);
    solver.set_initial(std::vector<double>(32, 1.3), std::vector<double>(32, 0.2),
                       std::vector<double>(32, 0.9));
    solver.advance_to(0.5);
    CHECK(solver.steps() > 0);
    const bool exact = s == TimeScheme::explicit_rk2;
    for (int i = 0; i < 32; ++i) {
      // Explicit flux differences vanish identically on constants; the split
      // scheme's tridiagonal solves leave last-ulp noise.
      if (exact) {
        CHECK(solver.v_at(i) == 1.3);
        CHECK(solver.u_at(i) == 0.2);
      } else {
        CHECK(solver.v_at(i) == doctest::Approx(1.3).epsilon(1e-13));
        CHECK(solver.u_at(i) == doctest::Approx(0.2).epsilon(1e-13));
      }
      CHECK(solver.theta_at(i) == doctest::Approx(0.9).epsilon(1e-13));
    }
  }
}

TEST_CASE("torus totals are conserved to round-off") {
  for (TimeScheme s : {TimeScheme::explicit_rk2, TimeScheme::strang_cn}) {
    const int n = s == TimeScheme::explicit_rk2 ? 128 : 512;
    const double T = s == TimeScheme::explicit_rk2 ? 0.5 : 2.0;
    NsSolver solver = make_periodic(n, s);
    const Conserved c0 = solver.totals();
    solver.advance_to(T);
    const Conserved c1 = solver.totals();
    CHECK(std::abs(c1.mass - c0.mass) < 1e-12);
    CHECK(std::abs(c1.momentum - c0.momentum) < 1e-12);
    CHECK(std::abs(c1.energy - c0.energy) < 1e-12);
    CHECK(solver.time() == T);
  }
}

TEST_CASE("perturbations decay on the torus") {
  NsSolver solver = make_periodic(512, TimeScheme::strang_cn);
  auto spread = [&] {
    double vmin = 1e300, vmax = -1e300;
    for (int i = 0; i < solver.cells(); ++i) {
      vmin = std::min(vmin, solver.v_at(i));
      vmax = std::max(vmax, solver.v_at(i));
    }
    return vmax - vmin;
  };
  const double s0 = spread();
  solver.advance_to(3.0);
  const double s1 = spread();
  CHECK(s0 > 0.09);
  // Slowest linearized mode decays like e^{-t} at these parameters.
  CHECK(s1 < 0.1 * s0);
}

TEST_CASE("schemes agree on a smooth run") {
  NsSolver a = make_periodic(128, TimeScheme::explicit_rk2);
  NsSolver b = make_periodic(128, TimeScheme::strang_cn);
  a.advance_to(0.2);
  b.advance_to(0.2);
  double worst = 0.0;
  for (int i = 0; i < 128; ++i) {
    worst = std::max(worst, std::abs(a.v_at(i) - b.v_at(i)));
    worst = std::max(worst, std::abs(a.u_at(i) - b.u_at(i)));
    worst = std::max(worst, std::abs(a.theta_at(i) - b.theta_at(i)));
  }
  CHECK(worst < 5e-4);
  CHECK(a.steps() > 20 * b.steps());  // the split scheme skips the diffusive CFL
}

TEST_CASE("self-convergence is second order") {
  for (TimeScheme s : {TimeScheme::explicit_rk2, TimeScheme::strang_cn}) {
    const double T = 0.1;
    NsSolver ref = make_periodic(512, s);
    ref.advance_to(T);
    auto err_vs_ref = [&](int n) {
      NsSolver solver = make_periodic(n, s);
      solver.advance_to(T);
      const int stride = 512 / n;
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        // cell centers align when both grids are offset by half a cell:
        // center i on coarse = average of the matching fine block
        double vf = 0.0, uf = 0.0;
        for (int j = 0; j < stride; ++j) {
          vf += ref.v_at(i * stride + j);
          uf += ref.u_at(i * stride + j);
        }
        worst = std::max(worst, std::abs(solver.v_at(i) - vf / stride));
        worst = std::max(worst, std::abs(solver.u_at(i) - uf / stride));
      }
      return worst;
    };
    const double e64 = err_vs_ref(64), e128 = err_vs_ref(128);
    const double order = std::log2(e64 / e128);
    CHECK(order > 1.6);
    CHECK(order < 2.6);
  }
}

TEST_CASE("state collapse raises a blow-up error") {
  SolverOptions o;
  NsSolver solver(GasParams{}, 0.0, 1.0 / 64, 64, o);
  solver.set_initial(std::vector<double>(64, 1.0), std::vector<double>(64, 0.0),
                     std::vector<double>(64, 1.0));
  // Boundary data that turns non-finite mid-run must be caught, not silently
  // propagated.
  solver.set_boundary([](double, double t) {
    return ThermoState{1.0, t > 0.05 ? std::nan("") : 0.0, 1.0};
  });
  CHECK_THROWS_AS(solver.advance_to(0.2), BlowupError);
}

TEST_CASE("callback boundaries hold a constant state and get proper probes") {
  SolverOptions o;
  o.scheme = TimeScheme::strang_cn;
  NsSolver solver(GasParams{}, -1.0, 2.0 / 64, 64, o);
  solver.set_initial(std::vector<double>(64, 1.1), std::vector<double>(64, 0.3),
                     std::vector<double>(64, 0.8));
  double xlo = 1e300, xhi = -1e300, tmax = -1.0;
  solver.set_boundary([&](double x, double t) {
    xlo = std::min(xlo, x);
    xhi = std::max(xhi, x);
    tmax = std::max(tmax, t);
    return ThermoState{1.1, 0.3, 0.8};
  });
  solver.advance_to(0.3);
  const double dx = 2.0 / 64;
  CHECK(xlo == doctest::Approx(-1.0 - 0.5 * dx).epsilon(1e-14));
  CHECK(xhi == doctest::Approx(1.0 + 0.5 * dx).epsilon(1e-14));
  CHECK(tmax <= 0.3 + 1e-12);
  CHECK(tmax > 0.29);
  for (int i = 0; i < 64; ++i) {
    CHECK(solver.v_at(i) == doctest::Approx(1.1).epsilon(1e-13));
    CHECK(solver.u_at(i) == doctest::Approx(0.3).epsilon(1e-13));
    CHECK(solver.theta_at(i) == doctest::Approx(0.8).epsilon(1e-13));
  }
}
