// Smooth rarefaction waves generated by the Burgers equation.
//
// The fan speed field w(x, t) solves w_t + w w_x = 0 from the monotone data
// w0(x) = (w+ + w-)/2 + (w+ - w-) tanh(x)/2, evaluated by inverting the
// characteristic map x = x0 + w0(x0) t (monotone for t >= 0).  A gas
// rarefaction of family 1 or 3 rides on the fan through the closed-form
// lambda-inverse V(w) = (gamma K / w^2)^{1/(gamma+1)} on the anchor isentrope;
// the velocity follows from du/dw = 2 V(w)/(gamma+1), tabulated once by
// quadrature and interpolated with cubic Hermite.
//
// The resulting (v, u, theta) satisfies the inviscid equations exactly (up to
// inversion and table tolerances); viscous terms involve the second
// derivatives exposed here.
#pragma once

#include <vector>

#include "wavecomp/gas.hpp"

namespace wavecomp {

class BurgersFan {
 public:
  // Requires w_minus <= w_plus.  Equal speeds give the degenerate constant fan.
  BurgersFan(double w_minus, double w_plus);

  double value(double x, double t) const;  // w
  double foot(double x, double t) const;   // characteristic foot x0
  double dx(double x, double t) const;     // w_x = w0'/(1 + w0' t)
  double dxx(double x, double t) const;    // w0''/(1 + w0' t)^3
  double dt(double x, double t) const;     // -w w_x

  double w_minus() const { return wm_; }
  double w_plus() const { return wp_; }
  bool degenerate() const { return deg_; }

 private:
  double w0(double x0) const;
  double w0p(double x0) const;

  double wm_ = 0.0, wp_ = 0.0, c_ = 0.0, d_ = 0.0;
  bool deg_ = false;
};

// Family-1 or family-3 rarefaction joining `far` (outer state) to `anchor`
// (inner state adjacent to the contact); both must lie on one isentrope.
// The fan is centered at x = 0; fields approach `far` on the outer side and
// `anchor` on the inner side.  All derivatives are closed-form in (w, w_x,
// w_xx) except u(w), which uses the Hermite table.
class RarefactionWave {
 public:
  RarefactionWave(const GasParams& g, int family, const ThermoState& anchor,
                  const ThermoState& far);

  double w(double x, double t) const { return fan_.value(x, t); }
  const BurgersFan& fan() const { return fan_; }
  int family() const { return family_; }
  double K() const { return K_; }

  double v(double x, double t) const;
  double u(double x, double t) const;
  double theta(double x, double t) const;
  double v_x(double x, double t) const;
  double u_x(double x, double t) const;
  double theta_x(double x, double t) const;
  double v_xx(double x, double t) const;
  double u_xx(double x, double t) const;
  double theta_xx(double x, double t) const;
  double v_t(double x, double t) const;
  double u_t(double x, double t) const;
  double theta_t(double x, double t) const;

 private:
  struct Point {  // everything at one (x, t), computed once
    double w, wx, wxx, V, dVdw, u;
  };
  Point at(double x, double t) const;
  double u_of_w(double w) const;

  GasParams gas_;
  int family_ = 0;
  double K_ = 0.0;
  BurgersFan fan_{0.0, 0.0};
  ThermoState anchor_, far_;
  // Hermite table for u(w) on [w_minus, w_plus]: values and exact slopes.
  std::vector<double> uw_, du_;
  double w_lo_ = 0.0, dw_ = 0.0;
};

}  // namespace wavecomp
