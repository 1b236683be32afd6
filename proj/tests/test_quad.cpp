#include <cmath>

#include "doctest.h"
#include "wavecomp/quad.hpp"

using namespace wavecomp;

TEST_CASE("elementary integrals") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return 3.0 * x * x; }, -1.0, 2.0) ==
        doctest::Approx(9.0).epsilon(1e-13));
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("orientation flips the sign") {
  const double fwd = integrate([](double x) { return std::exp(-x * x); }, 0.0, 3.0);
  const double bwd = integrate([](double x) { return std::exp(-x * x); }, 3.0, 0.0);
  CHECK(bwd == doctest::Approx(-fwd).epsilon(1e-14));
}

TEST_CASE("sharply peaked integrand is refined adaptively") {
  // Narrow Gaussian inside a wide interval.
  const double sig = 1e-3;
  const double val = integrate(
      [sig](double x) { return std::exp(-x * x / (2 * sig * sig)); }, -1.0, 1.0,
      1e-14);
  CHECK(val == doctest::Approx(std::sqrt(2.0 * M_PI) * sig).epsilon(1e-10));
}
