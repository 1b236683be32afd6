// Adaptive quadrature on finite intervals.
#pragma once

#include <functional>

namespace wavecomp {

// Adaptive Gauss-Kronrod integral of f over [a, b] (a > b allowed, sign flips).
// abs_tol is the absolute error target; throws NumericError if the estimated
// error is far above it.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

// Integral of f over [a, inf) for a > 0 and integrands with power-law decay:
// sums adaptive integrals over geometrically growing segments until a segment
// contributes less than abs_tol/10.
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double abs_tol = 1e-12);

}  // namespace wavecomp
