#include <cmath>
#include <vector>

#include "doctest.h"
#include "wavecomp/torus.hpp"

using namespace wavecomp;

TEST_CASE("index and point wrapping") {
  CHECK(wrap_index(5, 8) == 5);
  CHECK(wrap_index(-1, 8) == 7);
  CHECK(wrap_index(-9, 8) == 7);
  CHECK(wrap_index(17, 8) == 1);
  CHECK(wrap_point(1.25, 0.0, 1.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(wrap_point(-0.25, 0.0, 1.0) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(wrap_point(3.7, 2.0, 1.5) == doctest::Approx(2.2).epsilon(1e-13));
}

TEST_CASE("cubic interpolation is exact on cubics away from the seam") {
  const int n = 16;
  const double dx = 1.0 / n;
  std::vector<double> f(n);
  auto p = [](double x) { return 2.0 + 3.0 * x - x * x + 0.5 * x * x * x; };
  for (int i = 0; i < n; ++i) f[i] = p((i + 0.5) * dx);
  for (double x : {0.31, 0.4999, 0.62, 0.733}) {
    CHECK(torus_interp(f, 0.0, dx, x) == doctest::Approx(p(x)).epsilon(1e-13));
  }
}

TEST_CASE("interpolation of a periodic field converges at fourth order") {
  auto err_at = [](int n) {
    const double dx = 1.0 / n;
    std::vector<double> f(n);
    for (int i = 0; i < n; ++i) f[i] = std::sin(2 * M_PI * (i + 0.5) * dx);
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
      const double x = 0.002 * k + 0.0007;  // crosses the seam via wrap too
      worst = std::max(worst, std::abs(torus_interp(f, 0.0, dx, x - 0.3) -
                                       std::sin(2 * M_PI * (x - 0.3))));
    }
    return worst;
  };
  const double e64 = err_at(64), e128 = err_at(128);
  CHECK(e64 < 1e-4);
  const double order = std::log2(e64 / e128);
  CHECK(order > 3.5);
  CHECK(order < 4.5);
}
