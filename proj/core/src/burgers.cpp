#include "wavecomp/burgers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavecomp/quad.hpp"
#include "wavecomp/riemann.hpp"

namespace wavecomp {

BurgersFan::BurgersFan(double w_minus, double w_plus) : wm_(w_minus), wp_(w_plus) {
  if (!std::isfinite(w_minus) || !std::isfinite(w_plus) || w_minus > w_plus)
    throw DomainError("burgers fan: need w_minus <= w_plus");
  c_ = 0.5 * (wp_ + wm_);
  d_ = 0.5 * (wp_ - wm_);
  deg_ = (wp_ - wm_) <
         1e-14 * std::max({1.0, std::abs(wm_), std::abs(wp_)});
}

double BurgersFan::w0(double x0) const { return c_ + d_ * std::tanh(x0); }
double BurgersFan::w0p(double x0) const {
  const double z = std::tanh(x0);
  return d_ * (1.0 - z * z);
}

double BurgersFan::foot(double x, double t) const {
  if (!(t >= 0.0)) throw DomainError("burgers fan: t must be nonnegative");
  if (deg_) return x - c_ * t;
  // Solve x0 + w0(x0) t = x; the left side increases in x0.
  double lo = x - wp_ * t - 1.0, hi = x - wm_ * t + 1.0;
  double x0 = x - c_ * t;
  x0 = std::max(lo, std::min(hi, x0));
  for (int it = 0; it < 100; ++it) {
    const double g = x0 + w0(x0) * t - x;
    if (g > 0.0)
      hi = x0;
    else
      lo = x0;
    const double gp = 1.0 + w0p(x0) * t;
    double next = x0 - g / gp;  // Newton, bisection fallback
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x0);
    x0 = next;
    if (step <= 1e-14 * (1.0 + std::abs(x0))) break;
  }
  return x0;
}

double BurgersFan::value(double x, double t) const {
  if (deg_) return c_;
  return w0(foot(x, t));
}

double BurgersFan::dx(double x, double t) const {
  if (deg_) return 0.0;
  const double wp = w0p(foot(x, t));
  return wp / (1.0 + wp * t);
}

double BurgersFan::dxx(double x, double t) const {
  if (deg_) return 0.0;
  const double x0 = foot(x, t);
  const double z = std::tanh(x0);
  const double wp = d_ * (1.0 - z * z);
  const double wpp = -2.0 * d_ * z * (1.0 - z * z);
  const double J = 1.0 + wp * t;
  return wpp / (J * J * J);
}

double BurgersFan::dt(double x, double t) const {
  if (deg_) return 0.0;
  const double x0 = foot(x, t);
  const double w = w0(x0);
  const double wp = w0p(x0);
  return -w * wp / (1.0 + wp * t);
}

RarefactionWave::RarefactionWave(const GasParams& g, int family,
                                 const ThermoState& anchor, const ThermoState& far)
    : gas_(g), family_(family), anchor_(anchor), far_(far) {
  validate(g);
  validate(anchor, "rarefaction wave: anchor");
  validate(far, "rarefaction wave: far");
  if (family != 1 && family != 3)
    throw DomainError("rarefaction wave: family must be 1 or 3");

  K_ = pressure(g, anchor) * std::pow(anchor.v, g.gamma);
  const double K_far = pressure(g, far) * std::pow(far.v, g.gamma);
  if (std::abs(K_far / K_ - 1.0) > 1e-8)
    throw DomainError(
        "rarefaction wave: anchor and far states are not on one isentrope");
  if (far.v > anchor.v * (1.0 + 1e-12))
    throw DomainError(
        "rarefaction wave: far volume must not exceed the anchor volume "
        "(expansion runs from far into anchor)");
  const ThermoState check = rarefaction_connect(g, family, anchor, far.v,
                                                CurveMode::curve);
  const double uscale = std::max({1.0, std::abs(anchor.u), std::abs(far.u)});
  if (std::abs(check.u - far.u) > 1e-6 * uscale)
    throw DomainError(
        "rarefaction wave: far velocity is off the integral curve by " +
        std::to_string(check.u - far.u));

  const double wa = lambda_isentrope(g.gamma, K_, family, anchor.v);
  const double wf = lambda_isentrope(g.gamma, K_, family, far.v);
  if (family == 1)
    fan_ = BurgersFan(wf, wa);  // both negative, far is the outer (left) edge
  else
    fan_ = BurgersFan(wa, wf);  // both positive, far is the outer (right) edge

  // u(w) table on [w_minus, w_plus] by cumulative quadrature of
  // du/dw = 2 V(w)/(gamma+1), pinned to the anchor velocity.
  const int n = 2048;
  w_lo_ = fan_.w_minus();
  dw_ = (fan_.w_plus() - fan_.w_minus()) / n;
  uw_.assign(n + 1, anchor.u);
  du_.assign(n + 1, 0.0);
  if (!fan_.degenerate()) {
    const double cu = 2.0 / (g.gamma + 1.0);
    for (int i = 0; i <= n; ++i)
      du_[i] = cu * volume_at_lambda(g.gamma, K_, w_lo_ + i * dw_);
    uw_[0] = 0.0;
    for (int i = 0; i < n; ++i) {
      const double a = w_lo_ + i * dw_, b = a + dw_;
      uw_[i + 1] =
          uw_[i] + integrate(
                       [&](double wq) {
                         return cu * volume_at_lambda(g.gamma, K_, wq);
                       },
                       a, b, 1e-14);
    }
    // Shift so the anchor edge matches exactly.
    const double u_anchor_tab = (family == 1) ? uw_[n] : uw_[0];
    const double shift = anchor.u - u_anchor_tab;
    for (double& uu : uw_) uu += shift;
  }
}

double RarefactionWave::u_of_w(double w) const {
  const int n = static_cast<int>(uw_.size()) - 1;
  if (fan_.degenerate() || n <= 0) return anchor_.u;
  double s = (w - w_lo_) / dw_;
  const int i = std::max(0, std::min(n - 1, static_cast<int>(s)));
  s -= i;
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * uw_[i] + (s3 - 2 * s2 + s) * dw_ * du_[i] +
         (-2 * s3 + 3 * s2) * uw_[i + 1] + (s3 - s2) * dw_ * du_[i + 1];
}

RarefactionWave::Point RarefactionWave::at(double x, double t) const {
  Point p;
  if (fan_.degenerate()) {
    p.w = fan_.w_minus();
    p.wx = p.wxx = 0.0;
    p.V = anchor_.v;
    p.dVdw = 0.0;
    p.u = anchor_.u;
    return p;
  }
  const double x0 = fan_.foot(x, t);
  const double z = std::tanh(x0);
  const double w0p = 0.5 * (fan_.w_plus() - fan_.w_minus()) * (1.0 - z * z);
  const double w0pp = -2.0 * z * w0p;
  const double J = 1.0 + w0p * t;
  p.w = 0.5 * (fan_.w_plus() + fan_.w_minus()) +
        0.5 * (fan_.w_plus() - fan_.w_minus()) * z;
  p.wx = w0p / J;
  p.wxx = w0pp / (J * J * J);
  p.V = volume_at_lambda(gas_.gamma, K_, p.w);
  p.dVdw = -2.0 * p.V / ((gas_.gamma + 1.0) * p.w);
  p.u = u_of_w(p.w);
  return p;
}

double RarefactionWave::v(double x, double t) const { return at(x, t).V; }
double RarefactionWave::u(double x, double t) const { return at(x, t).u; }
double RarefactionWave::theta(double x, double t) const {
  const Point p = at(x, t);
  return K_ * std::pow(p.V, 1.0 - gas_.gamma) / gas_.R;
}
double RarefactionWave::v_x(double x, double t) const {
  const Point p = at(x, t);
  return p.dVdw * p.wx;
}
double RarefactionWave::u_x(double x, double t) const {
  const Point p = at(x, t);
  return 2.0 / (gas_.gamma + 1.0) * p.V * p.wx;
}
double RarefactionWave::theta_x(double x, double t) const {
  const Point p = at(x, t);
  return (1.0 - gas_.gamma) * K_ * std::pow(p.V, -gas_.gamma) / gas_.R *
         (p.dVdw * p.wx);
}
double RarefactionWave::v_xx(double x, double t) const {
  const Point p = at(x, t);
  const double g1 = gas_.gamma + 1.0;
  const double d2V = 2.0 * p.V * (gas_.gamma + 3.0) / (g1 * g1 * p.w * p.w);
  return d2V * p.wx * p.wx + p.dVdw * p.wxx;
}
double RarefactionWave::u_xx(double x, double t) const {
  const Point p = at(x, t);
  return 2.0 / (gas_.gamma + 1.0) * (p.dVdw * p.wx * p.wx + p.V * p.wxx);
}
double RarefactionWave::theta_xx(double x, double t) const {
  const Point p = at(x, t);
  const double g1 = gas_.gamma + 1.0;
  const double d2V = 2.0 * p.V * (gas_.gamma + 3.0) / (g1 * g1 * p.w * p.w);
  const double vx = p.dVdw * p.wx;
  const double vxx = d2V * p.wx * p.wx + p.dVdw * p.wxx;
  return (1.0 - gas_.gamma) * K_ / gas_.R *
         (-gas_.gamma * std::pow(p.V, -gas_.gamma - 1.0) * vx * vx +
          std::pow(p.V, -gas_.gamma) * vxx);
}
double RarefactionWave::v_t(double x, double t) const {
  const Point p = at(x, t);
  return p.dVdw * (-p.w * p.wx);
}
double RarefactionWave::u_t(double x, double t) const {
  const Point p = at(x, t);
  return 2.0 / (gas_.gamma + 1.0) * p.V * (-p.w * p.wx);
}
double RarefactionWave::theta_t(double x, double t) const {
  const Point p = at(x, t);
  return (1.0 - gas_.gamma) * K_ * std::pow(p.V, -gas_.gamma) / gas_.R *
         (p.dVdw * (-p.w * p.wx));
}

}  // namespace wavecomp
