// Viscous contact layer: self-similar solution of the log-diffusion equation
//
//   Theta_t = a (Theta_x / Theta)_x,   Theta(+-inf, t) = theta_-+,
//
// in the variable xi = x / sqrt(1+t):  -(xi/2) Theta' = a (Theta'/Theta)'.
// The two-point BVP is solved by damped Newton on a conservative second-order
// grid.  Higher derivatives follow exactly from the ODE via l = ln Theta:
//   l'' = -xi Theta' / (2a),            Theta'' = Theta (l'' + l'^2),
//   l''' = -(Theta' + xi Theta'')/(2a), Theta''' = Theta (l''' + 3 l' l'' + l'^3),
// so only (Theta, Theta') are tabulated; everything else is closed-form.
//
// The layer induces a wave (v, u, theta)(x, t) with
//   theta = Theta(xi),  v = (R/p*) Theta,  u = b l'(xi) / sqrt(1+t),
//   b = kappa (gamma-1) / (gamma R),
// which satisfies mass and momentum up to source terms Q1 (momentum) and Q2
// (energy) reported here in closed form.
#pragma once

#include <vector>

#include "wavecomp/gas.hpp"

namespace wavecomp {

struct ContactOptions {
  double half_width = 30.0;  // xi domain is [-L, L]
  int cells = 16384;         // grid intervals (nodes = cells + 1)
  double newton_tol = 1e-13; // on the h^2/a - scaled residual, sup norm
  int max_newton = 60;
  int max_doublings = 3;     // domain growth if the tails are not flat
};

// Tabulated self-similar profile on [-L, L]; constant extension outside.
class ContactProfile {
 public:
  ContactProfile() = default;
  ContactProfile(double a, double theta_minus, double theta_plus,
                 const ContactOptions& opts);

  // k-th derivative of Theta with respect to xi, k in [0, 4].
  double eval(double xi, int k) const;
  double log_deriv(double xi, int k) const;  // l^(k), k in [1, 4], l = ln Theta

  double a() const { return a_; }
  double theta_minus() const { return th_m_; }
  double theta_plus() const { return th_p_; }
  double half_width() const { return L_; }
  int cells() const { return n_; }
  double node(int i) const { return -L_ + h_ * i; }
  double node_value(int i) const { return th_[i]; }
  double node_slope(int i) const { return d1_[i]; }

  // Sup norm over the nodes of the independently discretized ODE residual
  // a (Theta'/Theta)' + (xi/2) Theta', with both derivatives taken by
  // fourth-order finite differences of the node values (not the tables).
  double ode_residual_sup() const;

  // Least-squares decay rate of the tail: fits ln|Theta'| ~ c - C2 xi^2 on the
  // requested side (sign = -1 left, +1 right) and returns C2.
  double gaussian_rate(int sign) const;

 private:
  void solve(const ContactOptions& opts);
  void build_tables();

  double a_ = 0.0, th_m_ = 1.0, th_p_ = 1.0;
  double L_ = 0.0, h_ = 0.0;
  int n_ = 0;
  std::vector<double> th_, d1_, d2_;  // Theta, Theta', Theta'' at the nodes
};

// The contact wave riding on middle pressure p_star, with temperatures
// theta_minus / theta_plus on the two sides.  All fields use u_ref = 0.
class ContactWave {
 public:
  ContactWave(const GasParams& g, double p_star, double theta_minus,
              double theta_plus, const ContactOptions& opts = {});

  double a() const { return prof_.a(); }
  double bcoef() const { return b_; }
  double p_star() const { return p_star_; }
  const ContactProfile& profile() const { return prof_; }

  double theta(double x, double t) const;
  double theta_x(double x, double t) const;
  double theta_t(double x, double t) const;
  double theta_xx(double x, double t) const;
  double v(double x, double t) const;
  double v_x(double x, double t) const;
  double v_t(double x, double t) const;
  double u(double x, double t) const;
  double u_x(double x, double t) const;
  double u_xx(double x, double t) const;
  double u_t(double x, double t) const;

  // Momentum and energy closure defects of the wave (the wave solves the full
  // system only up to these residual sources).
  double Q1(double x, double t) const;
  double Q2(double x, double t) const;

 private:
  GasParams gas_;
  double p_star_ = 0.0, b_ = 0.0;
  ContactProfile prof_;
};

}  // namespace wavecomp
