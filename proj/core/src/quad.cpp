#include "wavecomp/quad.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "wavecomp/error.hpp"

namespace wavecomp {

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, abs_tol);

  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

  // Boost's adaptive termination is relative to the L1 norm, which makes
  // near-degenerate intervals refine to max_depth chasing roundoff.  Do one
  // non-adaptive pass first; it settles short or smooth intervals immediately
  // and yields the L1 norm needed to convert abs_tol to a relative target.
  double err = 0.0, l1 = 0.0;
  double val = GK::integrate(f, a, b, /*max_depth=*/0, /*tol=*/0.0, &err, &l1);
  if (err > abs_tol) {
    const double rel = std::max(abs_tol / std::max(l1, 1e-300), 1e-15);
    val = GK::integrate(f, a, b, /*max_depth=*/20, /*tol=*/rel, &err, &l1);
  }
  if (!std::isfinite(val))
    throw NumericError("integrate: non-finite result");
  // err is the estimated absolute error; allow generous headroom over the
  // request before declaring failure (estimates are conservative).
  if (err > 1e6 * abs_tol && err > 1e-8 * std::abs(val) && err > 1e-10)
    throw NumericError("integrate: error estimate " + std::to_string(err) +
                       " above tolerance");
  return val;
}

double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double abs_tol) {
  if (!(a > 0.0)) throw NumericError("integrate_to_inf: requires a > 0");
  double total = 0.0;
  double lo = a;
  for (int k = 0; k < 400; ++k) {
    const double hi = lo * 4.0;
    const double seg = integrate(f, lo, hi, abs_tol);
    total += seg;
    if (std::abs(seg) < 0.1 * abs_tol) return total;
    lo = hi;
  }
  throw NumericError("integrate_to_inf: tail did not converge");
}

}  // namespace wavecomp
