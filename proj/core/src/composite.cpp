#include "wavecomp/composite.hpp"

namespace wavecomp {

CompositeWave::CompositeWave(const GasParams& g, const ThermoState& left,
                             const ThermoState& right,
                             const ContactOptions& copts)
    : gas_(g),
      pat_(solve_pattern(g, left, right)),
      cd_(g, pat_.p_star, pat_.mid_left.theta, pat_.mid_right.theta, copts),
      r1_(g, 1, pat_.mid_left, pat_.left),
      r3_(g, 3, pat_.mid_right, pat_.right) {}

double CompositeWave::v(double x, double t) const {
  return r1_.v(x, t) + cd_.v(x, t) + r3_.v(x, t) -
         (pat_.mid_left.v + pat_.mid_right.v);
}

double CompositeWave::u(double x, double t) const {
  // The contact's velocity profile is centered at zero, so the double-counted
  // middle velocity appears once.
  return r1_.u(x, t) + cd_.u(x, t) + r3_.u(x, t) - pat_.mid_left.u;
}

double CompositeWave::theta(double x, double t) const {
  return r1_.theta(x, t) + cd_.theta(x, t) + r3_.theta(x, t) -
         (pat_.mid_left.theta + pat_.mid_right.theta);
}

double CompositeWave::v_x(double x, double t) const {
  return r1_.v_x(x, t) + cd_.v_x(x, t) + r3_.v_x(x, t);
}

double CompositeWave::u_x(double x, double t) const {
  return r1_.u_x(x, t) + cd_.u_x(x, t) + r3_.u_x(x, t);
}

double CompositeWave::theta_x(double x, double t) const {
  return r1_.theta_x(x, t) + cd_.theta_x(x, t) + r3_.theta_x(x, t);
}

double CompositeWave::v_xx(double x, double t) const {
  return r1_.v_xx(x, t) + gas_.R / pat_.p_star * cd_.theta_xx(x, t) +
         r3_.v_xx(x, t);
}

double CompositeWave::u_xx(double x, double t) const {
  return r1_.u_xx(x, t) + cd_.u_xx(x, t) + r3_.u_xx(x, t);
}

double CompositeWave::theta_xx(double x, double t) const {
  return r1_.theta_xx(x, t) + cd_.theta_xx(x, t) + r3_.theta_xx(x, t);
}

double CompositeWave::v_t(double x, double t) const {
  return r1_.v_t(x, t) + cd_.v_t(x, t) + r3_.v_t(x, t);
}

double CompositeWave::u_t(double x, double t) const {
  return r1_.u_t(x, t) + cd_.u_t(x, t) + r3_.u_t(x, t);
}

double CompositeWave::theta_t(double x, double t) const {
  return r1_.theta_t(x, t) + cd_.theta_t(x, t) + r3_.theta_t(x, t);
}

double CompositeWave::pressure(double x, double t) const {
  return gas_.R * theta(x, t) / v(x, t);
}

double CompositeWave::pressure_x(double x, double t) const {
  const double vv = v(x, t);
  return gas_.R * (theta_x(x, t) * vv - theta(x, t) * v_x(x, t)) / (vv * vv);
}

double CompositeWave::momentum_residual(double x, double t) const {
  const double vv = v(x, t);
  const double visc =
      gas_.mu * (u_xx(x, t) / vv - u_x(x, t) * v_x(x, t) / (vv * vv));
  return u_t(x, t) + pressure_x(x, t) - visc;
}

double CompositeWave::energy_residual(double x, double t) const {
  const double vv = v(x, t);
  const double ux = u_x(x, t);
  const double cond = gas_.kappa * (theta_xx(x, t) / vv -
                                    theta_x(x, t) * v_x(x, t) / (vv * vv));
  return gas_.R / (gas_.gamma - 1.0) * theta_t(x, t) + pressure(x, t) * ux -
         cond - gas_.mu * ux * ux / vv;
}

}  // namespace wavecomp
