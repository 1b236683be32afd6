#include "wavecomp/nskernel.hpp"

#include <cmath>
#include <cstdio>

#include "wavecomp/error.hpp"

namespace wavecomp {

namespace {

double kahan(const std::vector<double>& a, int lo, int hi) {
  double s = 0.0, c = 0.0;
  for (int i = lo; i < hi; ++i) {
    const double y = a[i] - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

// Thomas solve of (a, b, c) x = d.  d is overwritten with x; cp is scratch.
void thomas(const double* a, const double* b, const double* c, double* d,
            double* cp, int n) {
  cp[0] = c[0] / b[0];
  d[0] = d[0] / b[0];
  for (int i = 1; i < n; ++i) {
    const double m = b[i] - a[i] * cp[i - 1];
    cp[i] = c[i] / m;
    d[i] = (d[i] - a[i] * d[i - 1]) / m;
  }
  for (int i = n - 2; i >= 0; --i) d[i] -= cp[i] * d[i + 1];
}

// Cyclic tridiagonal solve (row 0 couples to x_{n-1} through a[0], row n-1
// couples to x_0 through c[n-1]) via Sherman-Morrison: two Thomas passes.
void cyclic_thomas(const std::vector<double>& a, std::vector<double> b,
                   const std::vector<double>& c, std::vector<double>& d,
                   std::vector<double>& z, std::vector<double>& cp, int n) {
  const double alpha = a[0], beta = c[n - 1];
  const double gamma = -b[0];
  b[0] -= gamma;
  b[n - 1] -= alpha * beta / gamma;
  thomas(a.data(), b.data(), c.data(), d.data(), cp.data(), n);
  std::fill(z.begin(), z.begin() + n, 0.0);
  z[0] = gamma;
  z[n - 1] = beta;
  thomas(a.data(), b.data(), c.data(), z.data(), cp.data(), n);
  const double fact = (d[0] + alpha * d[n - 1] / gamma) /
                      (1.0 + z[0] + alpha * z[n - 1] / gamma);
  for (int i = 0; i < n; ++i) d[i] -= fact * z[i];
}

std::string at_time(const char* what, double t) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s at t=%.6g", what, t);
  return buf;
}

}  // namespace

NsSolver::NsSolver(const GasParams& g, double x0, double dx, int n,
                   const SolverOptions& opts)
    : gas_(g), x0_(x0), dx_(dx), n_(n), opts_(opts) {
  validate(g);
  if (!(dx > 0.0) || n < 4) throw DomainError("solver grid: need dx>0, n>=4");
  if (!(opts.cfl > 0.0) || opts.cfl > 1.0)
    throw DomainError("solver cfl must lie in (0, 1]");
  const int m = n_ + 2;
  for (Array* p : {&v_, &u_, &E_, &iv_, &th_, &p_, &v1_, &u1_, &E1_, &rv_,
                   &ru_, &rE_, &rv2_, &ru2_, &rE2_, &e_, &ubar_, &ebar_})
    p->assign(m, 0.0);
  for (Array* p : {&fv_, &fu_, &fE_, &ivm_}) p->assign(n_ + 1, 0.0);
  for (Array* p : {&src_, &lo_, &di_, &up_, &rhs1_, &sol_, &z_, &cp_})
    p->assign(n_, 0.0);
  v_.assign(m, 1.0);
  E_.assign(m, 1.0);
}

void NsSolver::set_initial(const std::vector<double>& v,
                           const std::vector<double>& u,
                           const std::vector<double>& theta) {
  if (static_cast<int>(v.size()) != n_ || static_cast<int>(u.size()) != n_ ||
      static_cast<int>(theta.size()) != n_)
    throw DomainError("set_initial: field size != cell count");
  for (int i = 0; i < n_; ++i) {
    validate(ThermoState{v[i], u[i], theta[i]});
    v_[i + 1] = v[i];
    u_[i + 1] = u[i];
    E_[i + 1] = wavecomp::total_energy(gas_, ThermoState{v[i], u[i], theta[i]});
  }
  t_ = 0.0;
  steps_ = 0;
  last_dt_ = 0.0;
  bflux_ = BoundaryFluxes{};
}

void NsSolver::set_boundary(BoundaryFn fn) { boundary_ = std::move(fn); }

double NsSolver::theta_at(int i) const {
  return theta_from_conservative(gas_, v_[i + 1], u_[i + 1], E_[i + 1]);
}

std::vector<double> NsSolver::v() const {
  return {v_.begin() + 1, v_.end() - 1};
}
std::vector<double> NsSolver::u() const {
  return {u_.begin() + 1, u_.end() - 1};
}
std::vector<double> NsSolver::total_energy() const {
  return {E_.begin() + 1, E_.end() - 1};
}
std::vector<double> NsSolver::theta() const {
  std::vector<double> th(n_);
  for (int i = 0; i < n_; ++i) th[i] = theta_at(i);
  return th;
}

Conserved NsSolver::totals() const {
  return {dx_ * kahan(v_, 1, n_ + 1), dx_ * kahan(u_, 1, n_ + 1),
          dx_ * kahan(E_, 1, n_ + 1)};
}

void NsSolver::fill_ghosts(Array& v, Array& u, Array& E, double t) const {
  if (!boundary_) {
    v[0] = v[n_];
    u[0] = u[n_];
    E[0] = E[n_];
    v[n_ + 1] = v[1];
    u[n_ + 1] = u[1];
    E[n_ + 1] = E[1];
    return;
  }
  const ThermoState l = boundary_(x0_ - 0.5 * dx_, t);
  const ThermoState r = boundary_(x0_ + (n_ + 0.5) * dx_, t);
  v[0] = l.v;
  u[0] = l.u;
  E[0] = wavecomp::total_energy(gas_, l);
  v[n_ + 1] = r.v;
  u[n_ + 1] = r.u;
  E[n_ + 1] = wavecomp::total_energy(gas_, r);
}

void NsSolver::thermo(const Array& v, const Array& u, const Array& E,
                      Array& iv, Array& th, Array& p) const {
  const double gm1 = gas_.gamma - 1.0;
  for (int i = 0; i <= n_ + 1; ++i) {
    iv[i] = 1.0 / v[i];
    th[i] = gm1 * (E[i] - 0.5 * u[i] * u[i]) / gas_.R;
    p[i] = gas_.R * th[i] * iv[i];
  }
}

void NsSolver::rhs(const Array& v, const Array& u, const Array& E,
                   bool viscous, Array& rv, Array& ru, Array& rE) {
  thermo(v, u, E, iv_, th_, p_);
  const double idx = 1.0 / dx_;
  for (int f = 0; f <= n_; ++f) {
    fv_[f] = 0.5 * (u[f] + u[f + 1]);
    fu_[f] = -0.5 * (p_[f] + p_[f + 1]);
    fE_[f] = -0.5 * (p_[f] * u[f] + p_[f + 1] * u[f + 1]);
    if (viscous) {
      const double ivm = 0.5 * (iv_[f] + iv_[f + 1]);
      const double du = (u[f + 1] - u[f]) * idx;
      fu_[f] += gas_.mu * du * ivm;
      fE_[f] += gas_.kappa * (th_[f + 1] - th_[f]) * idx * ivm +
                gas_.mu * 0.5 * (u[f] + u[f + 1]) * du * ivm;
    }
  }
  for (int i = 1; i <= n_; ++i) {
    rv[i] = (fv_[i] - fv_[i - 1]) * idx;
    ru[i] = (fu_[i] - fu_[i - 1]) * idx;
    rE[i] = (fE_[i] - fE_[i - 1]) * idx;
  }
}

double NsSolver::stable_dt() const {
  const double gm1 = gas_.gamma - 1.0;
  double lam_max = 0.0, v_min = 1e300;
  for (int i = 1; i <= n_; ++i) {
    const double th = gm1 * (E_[i] - 0.5 * u_[i] * u_[i]) / gas_.R;
    if (!(v_[i] > 0.0) || !(th > 0.0) || !std::isfinite(v_[i]) ||
        !std::isfinite(u_[i]) || !std::isfinite(E_[i]))
      throw BlowupError(at_time("nonpositive or nonfinite state", t_));
    lam_max = std::max(lam_max, std::sqrt(gas_.gamma * gas_.R * th) / v_[i]);
    v_min = std::min(v_min, v_[i]);
  }
  double dt = dx_ / lam_max;
  if (opts_.scheme == TimeScheme::explicit_rk2) {
    const double diff = std::max(gas_.mu, gas_.kappa * gm1 / gas_.R);
    dt = std::min(dt, dx_ * dx_ * v_min / (2.0 * diff));
  }
  return opts_.cfl * dt;
}

void NsSolver::validate_state(double t) const {
  const double gm1 = gas_.gamma - 1.0;
  for (int i = 1; i <= n_; ++i) {
    const double th = gm1 * (E_[i] - 0.5 * u_[i] * u_[i]) / gas_.R;
    if (!(v_[i] > 0.0) || !(th > 0.0) || !std::isfinite(E_[i]) ||
        !std::isfinite(u_[i]))
      throw BlowupError(at_time("nonpositive or nonfinite state", t));
  }
}

void NsSolver::tally_edges(double w) {
  bflux_.left.mass += w * fv_[0];
  bflux_.left.momentum += w * fu_[0];
  bflux_.left.energy += w * fE_[0];
  bflux_.right.mass += w * fv_[n_];
  bflux_.right.momentum += w * fu_[n_];
  bflux_.right.energy += w * fE_[n_];
}

void NsSolver::step_explicit(double dt) {
  fill_ghosts(v_, u_, E_, t_);
  rhs(v_, u_, E_, true, rv_, ru_, rE_);
  tally_edges(0.5 * dt);
  for (int i = 1; i <= n_; ++i) {
    v1_[i] = v_[i] + dt * rv_[i];
    u1_[i] = u_[i] + dt * ru_[i];
    E1_[i] = E_[i] + dt * rE_[i];
  }
  fill_ghosts(v1_, u1_, E1_, t_ + dt);
  rhs(v1_, u1_, E1_, true, rv2_, ru2_, rE2_);
  tally_edges(0.5 * dt);
  for (int i = 1; i <= n_; ++i) {
    v_[i] = 0.5 * (v_[i] + v1_[i] + dt * rv2_[i]);
    u_[i] = 0.5 * (u_[i] + u1_[i] + dt * ru2_[i]);
    E_[i] = 0.5 * (E_[i] + E1_[i] + dt * rE2_[i]);
  }
}

void NsSolver::advect(double h, double ta) {
  fill_ghosts(v_, u_, E_, ta);
  rhs(v_, u_, E_, false, rv_, ru_, rE_);
  tally_edges(0.5 * h);
  for (int i = 1; i <= n_; ++i) {
    v1_[i] = v_[i] + h * rv_[i];
    u1_[i] = u_[i] + h * ru_[i];
    E1_[i] = E_[i] + h * rE_[i];
  }
  fill_ghosts(v1_, u1_, E1_, ta + h);
  rhs(v1_, u1_, E1_, false, rv2_, ru2_, rE2_);
  tally_edges(0.5 * h);
  for (int i = 1; i <= n_; ++i) {
    v_[i] = 0.5 * (v_[i] + v1_[i] + h * rv2_[i]);
    u_[i] = 0.5 * (u_[i] + u1_[i] + h * ru2_[i]);
    E_[i] = 0.5 * (E_[i] + E1_[i] + h * rE2_[i]);
  }
}

void NsSolver::diffuse(double h, double ta) {
  const double tb = ta + h;
  const double gm1 = gas_.gamma - 1.0;
  const double idx = 1.0 / dx_, idx2 = idx * idx;
  const double kp = gas_.kappa * gm1 / gas_.R;  // e-diffusivity numerator

  // Ghost data at both time levels; v is frozen during this substep.
  fill_ghosts(v_, u_, E_, ta);
  double ugl_a = u_[0], ugr_a = u_[n_ + 1];
  double egl_a = E_[0] - 0.5 * u_[0] * u_[0];
  double egr_a = E_[n_ + 1] - 0.5 * u_[n_ + 1] * u_[n_ + 1];
  double ugl_b = ugl_a, ugr_b = ugr_a, egl_b = egl_a, egr_b = egr_a;
  if (boundary_) {
    const ThermoState l = boundary_(x0_ - 0.5 * dx_, tb);
    const ThermoState r = boundary_(x0_ + (n_ + 0.5) * dx_, tb);
    ugl_b = l.u;
    ugr_b = r.u;
    egl_b = gas_.R * l.theta / gm1;
    egr_b = gas_.R * r.theta / gm1;
    egl_a = gas_.R * theta_from_conservative(gas_, v_[0], u_[0], E_[0]) / gm1;
    egr_a = gas_.R *
            theta_from_conservative(gas_, v_[n_ + 1], u_[n_ + 1], E_[n_ + 1]) /
            gm1;
  }
  for (int i = 0; i <= n_ + 1; ++i) e_[i] = E_[i] - 0.5 * u_[i] * u_[i];
  for (int f = 0; f <= n_; ++f)
    ivm_[f] = 0.5 * (1.0 / v_[f] + 1.0 / v_[f + 1]);

  // ---- Crank-Nicolson for u with coefficient mu * ivm / dx^2.
  auto cn_solve = [&](const Array& y, double coef, double ygl_a, double ygr_a,
                      double ygl_b, double ygr_b, const double* extra_src) {
    for (int k = 0; k < n_; ++k) {
      const double al = coef * ivm_[k] * idx2;      // left face of cell k+1
      const double ar = coef * ivm_[k + 1] * idx2;  // right face
      lo_[k] = -0.5 * h * al;
      di_[k] = 1.0 + 0.5 * h * (al + ar);
      up_[k] = -0.5 * h * ar;
      const double yl = (k == 0 && boundary_) ? ygl_a : y[k];
      const double yr = (k == n_ - 1 && boundary_) ? ygr_a : y[k + 2];
      rhs1_[k] = y[k + 1] + 0.5 * h * (ar * (yr - y[k + 1]) -
                                       al * (y[k + 1] - yl));
      if (extra_src) rhs1_[k] += h * extra_src[k];
    }
    if (boundary_) {
      rhs1_[0] += 0.5 * h * coef * ivm_[0] * idx2 * ygl_b;
      rhs1_[n_ - 1] += 0.5 * h * coef * ivm_[n_] * idx2 * ygr_b;
      lo_[0] = 0.0;
      up_[n_ - 1] = 0.0;
      thomas(lo_.data(), di_.data(), up_.data(), rhs1_.data(), cp_.data(), n_);
    } else {
      cyclic_thomas(lo_, di_, up_, rhs1_, z_, cp_, n_);
    }
  };

  cn_solve(u_, gas_.mu, ugl_a, ugr_a, ugl_b, ugr_b, nullptr);
  for (int i = 1; i <= n_; ++i) ubar_[i] = 0.5 * (u_[i] + rhs1_[i - 1]);
  if (boundary_) {
    ubar_[0] = 0.5 * (ugl_a + ugl_b);
    ubar_[n_ + 1] = 0.5 * (ugr_a + ugr_b);
  } else {
    ubar_[0] = ubar_[n_];
    ubar_[n_ + 1] = ubar_[1];
  }

  // Viscous heating, split per face so the kinetic-energy change cancels
  // exactly in the total-energy sum.
  for (int k = 0; k < n_; ++k) {
    const double dl = ubar_[k + 1] - ubar_[k], dr = ubar_[k + 2] - ubar_[k + 1];
    src_[k] = 0.5 * gas_.mu * idx2 * (ivm_[k] * dl * dl + ivm_[k + 1] * dr * dr);
  }

  // ---- Crank-Nicolson for internal energy with kp * ivm / dx^2 + heating.
  cn_solve(e_, kp, egl_a, egr_a, egl_b, egr_b, src_.data());
  for (int i = 1; i <= n_; ++i) ebar_[i] = 0.5 * (e_[i] + rhs1_[i - 1]);
  if (boundary_) {
    ebar_[0] = 0.5 * (egl_a + egl_b);
    ebar_[n_ + 1] = 0.5 * (egr_a + egr_b);
  } else {
    ebar_[0] = ebar_[n_];
    ebar_[n_ + 1] = ebar_[1];
  }

  // Re-apply both updates from face fluxes of the midpoint states: identical
  // in exact arithmetic, but telescopes exactly in floating point.
  for (int f = 0; f <= n_; ++f) {
    fu_[f] = gas_.mu * (ubar_[f + 1] - ubar_[f]) * idx * ivm_[f];
    fE_[f] = kp * (ebar_[f + 1] - ebar_[f]) * idx * ivm_[f];
  }
  for (int i = 1; i <= n_; ++i) {
    const double un = u_[i] + h * (fu_[i] - fu_[i - 1]) * idx;
    const double en = e_[i] + h * (fE_[i] - fE_[i - 1]) * idx + h * src_[i - 1];
    u_[i] = un;
    E_[i] = en + 0.5 * un * un;
  }

  // Edge bookkeeping: momentum leaves through fu; total energy through the
  // heat flux plus the viscous work fu * u at the face midpoint.  The per-face
  // heating split makes this identity exact for the cell sums.
  bflux_.left.momentum += h * fu_[0];
  bflux_.right.momentum += h * fu_[n_];
  bflux_.left.energy += h * (fE_[0] + fu_[0] * 0.5 * (ubar_[0] + ubar_[1]));
  bflux_.right.energy +=
      h * (fE_[n_] + fu_[n_] * 0.5 * (ubar_[n_] + ubar_[n_ + 1]));
}

void NsSolver::step_strang(double dt) {
  diffuse(0.5 * dt, t_);
  advect(dt, t_);
  diffuse(0.5 * dt, t_ + 0.5 * dt);
}

void NsSolver::advance_to(double t_end) {
  const double eps = 1e-12 * std::max(1.0, std::abs(t_end));
  while (t_ < t_end - eps) {
    double dt = stable_dt();
    if (!(dt > 0.0) || !std::isfinite(dt))
      throw NumericError(at_time("time step collapsed", t_));
    bool final = false;
    if (t_ + dt >= t_end) {
      dt = t_end - t_;
      final = true;
    }
    if (opts_.scheme == TimeScheme::explicit_rk2)
      step_explicit(dt);
    else
      step_strang(dt);
    t_ = final ? t_end : t_ + dt;
    last_dt_ = dt;
    ++steps_;
  }
  validate_state(t_);
}

}  // namespace wavecomp
