// Heat-kernel weight pair for the weighted-energy diagnostics:
//
//   w(x,t) = (1+t)^{-1/2} exp(-sigma x^2 / (1+t)),   g(x,t) = int_{-inf}^x w dy,
//
// with the exact identities 4 sigma g_t = w_x, w_t = w_xx / (4 sigma), and
// sup_x g = sqrt(pi / sigma).  The duality estimate bounds the space-time
// square integral of a field against w^2 by its initial mass, its slope
// integral, and a time-derivative pairing.
#pragma once

#include <vector>

namespace wavecomp {

class HeatKernelWeight {
 public:
  explicit HeatKernelWeight(double sigma = 0.1);

  double sigma() const { return sigma_; }
  // weight admissibility against a contact Gaussian tail rate
  bool admissible_for(double C2) const { return sigma_ <= 0.25 * C2 + 1e-12; }

  double w(double x, double t) const;
  double w_x(double x, double t) const;
  double w_xx(double x, double t) const;
  double w_t(double x, double t) const;
  double g(double x, double t) const;  // closed form via erf
  double g_t(double x, double t) const;
  double g_sup() const;  // sqrt(pi / sigma)

 private:
  double sigma_;
};

// Both sides of the weighted square estimate for a sampled field h(x, t):
//   lhs = int_0^T int h^2 w^2 dx dt
//   rhs = 4 pi ||h(0)||^2 + (4 pi / sigma) int ||h_x||^2 dt
//         + 8 sigma int int h_t h g^2 dx dt,
// all integrals trapezoidal on the given grids, h_t by centered time
// differences (one-sided at the ends).
struct DualityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double term_h0 = 0.0;
  double term_hx = 0.0;
  double term_dual = 0.0;
  double slack = 0.0;  // rhs - lhs
};

// With check_resolution set (and >= 5 snapshots), both sides are recomputed on
// every other snapshot; a >10% shift in either throws ResolutionError.
DualityReport weighted_square_integral(const HeatKernelWeight& hk,
                                       const std::vector<double>& t,
                                       const std::vector<double>& x,
                                       const std::vector<std::vector<double>>& h,
                                       bool check_resolution = true);

}  // namespace wavecomp
