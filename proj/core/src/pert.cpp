#include "wavecomp/pert.hpp"

#include <cmath>
#include <cstdio>

#include "wavecomp/error.hpp"
#include "wavecomp/norms.hpp"
#include "wavecomp/torus.hpp"

namespace wavecomp {

void PeriodicPerturbation::validate() const {
  if (!(period > 0.0) || !std::isfinite(period))
    throw DomainError("perturbation: period must be positive");
  for (const auto& comp : modes)
    for (const auto& m : comp) {
      if (m.k < 1) throw DomainError("perturbation: mode numbers start at 1");
      if (!std::isfinite(m.amp_cos) || !std::isfinite(m.amp_sin))
        throw DomainError("perturbation: non-finite amplitude");
    }
}

bool PeriodicPerturbation::zero() const {
  for (const auto& comp : modes)
    for (const auto& m : comp)
      if (m.amp_cos != 0.0 || m.amp_sin != 0.0) return false;
  return true;
}

double PeriodicPerturbation::eval(int comp, double x) const {
  return deriv(comp, x, 0);
}

double PeriodicPerturbation::deriv(int comp, double x, int order) const {
  if (comp < 0 || comp > 2) throw DomainError("perturbation: component must be 0..2");
  if (order < 0 || order > 3) throw DomainError("perturbation: derivative order must be 0..3");
  double s = 0.0;
  for (const auto& m : modes[static_cast<std::size_t>(comp)]) {
    const double w = 2.0 * M_PI * m.k / period;
    // each d/dx maps the (cos, sin) pair (a, b) to (w b, -w a)
    double a = m.amp_cos, b = m.amp_sin;
    for (int j = 0; j < order; ++j) {
      const double an = w * b, bn = -w * a;
      a = an;
      b = bn;
    }
    s += a * std::cos(w * x) + b * std::sin(w * x);
  }
  return s;
}

double PeriodicPerturbation::h3_norm() const {
  double s = 0.0;
  for (const auto& comp : modes)
    for (const auto& m : comp) {
      const double w = 2.0 * M_PI * m.k / period;
      const double w2 = w * w;
      const double weight = 1.0 + w2 * (1.0 + w2 * (1.0 + w2));
      s += (m.amp_cos * m.amp_cos + m.amp_sin * m.amp_sin) * 0.5 * period * weight;
    }
  return std::sqrt(s);
}

void PeriodicPerturbation::rescale(double eps1) {
  if (!(eps1 > 0.0) || !std::isfinite(eps1))
    throw DomainError("perturbation: target size must be positive");
  const double cur = h3_norm();
  if (!(cur > 0.0)) throw DomainError("perturbation: cannot rescale the zero shape");
  const double f = eps1 / cur;
  for (auto& comp : modes)
    for (auto& m : comp) {
      m.amp_cos *= f;
      m.amp_sin *= f;
    }
}

PeriodicPerturbation default_perturbation(double eps1) {
  if (!(eps1 >= 0.0) || !std::isfinite(eps1))
    throw DomainError("perturbation: size must be nonnegative");
  PeriodicPerturbation p;
  p.modes[0] = {{1, 1.0, 0.0}};
  p.modes[1] = {{1, 0.0, 0.7}};
  p.modes[2] = {{1, 0.0, 0.3}, {2, 0.5, 0.0}};
  if (eps1 == 0.0) {
    for (auto& comp : p.modes)
      for (auto& m : comp) m.amp_cos = m.amp_sin = 0.0;
  } else {
    p.rescale(eps1);
  }
  return p;
}

void build_initial_data(const GasParams& g, const ThermoState& base,
                        const PeriodicPerturbation& pert, int cells,
                        std::vector<double>& v0, std::vector<double>& u0,
                        std::vector<double>& theta0) {
  wavecomp::validate(g);
  wavecomp::validate(base, "base state");
  pert.validate();
  if (cells < 4) throw DomainError("build_initial_data: need at least 4 cells");
  const double dx = pert.period / cells;
  const double E_base = total_energy(g, base);
  v0.resize(cells);
  u0.resize(cells);
  theta0.resize(cells);
  for (int i = 0; i < cells; ++i) {
    const double x = (i + 0.5) * dx;
    const double v = base.v + pert.eval(0, x);
    const double u = base.u + pert.eval(1, x);
    const double E = E_base + pert.eval(2, x);
    const double th = theta_from_conservative(g, v, u, E);
    if (!(v > 0.0))
      throw DomainError("build_initial_data: perturbation drives the volume nonpositive");
    if (!(th > 0.0))
      throw DomainError("build_initial_data: perturbation drives the temperature nonpositive");
    v0[i] = v;
    u0[i] = u;
    theta0[i] = th;
  }
}

PeriodicSolution::PeriodicSolution(const GasParams& g, const ThermoState& base,
                                   const PeriodicPerturbation& pert, int cells,
                                   TimeScheme scheme, double cfl)
    : base_(base),
      E_base_(total_energy(g, base)),
      pert_(pert),
      solver_(g, 0.0, pert.period / std::max(cells, 1), cells,
              SolverOptions{cfl, scheme}) {
  std::vector<double> v0, u0, th0;
  build_initial_data(g, base, pert, cells, v0, u0, th0);
  solver_.set_initial(v0, u0, th0);
  totals0_ = solver_.totals();
}

void PeriodicSolution::capture(const std::vector<double>& times) {
  for (double t : times) {
    if (t < solver_.time() - 1e-9 * std::max(1.0, std::abs(t)))
      throw DomainError("capture: times must be nondecreasing");
    solver_.advance_to(t);
    caps_.push_back({solver_.time(), solver_.v(), solver_.u(), solver_.total_energy(),
                     solver_.theta()});
  }
}

int PeriodicSolution::find_capture(double t, double tol) const {
  for (int i = 0; i < n_captures(); ++i)
    if (std::abs(caps_[static_cast<std::size_t>(i)].t - t) <= tol) return i;
  return -1;
}

double PeriodicSolution::tilde_v(int i, double x) const {
  if (caps_.at(i).t == 0.0) return pert_.eval(0, x);
  return torus_interp(caps_.at(i).v, 0.0, dx(), x) - base_.v;
}
double PeriodicSolution::tilde_u(int i, double x) const {
  if (caps_.at(i).t == 0.0) return pert_.eval(1, x);
  return torus_interp(caps_.at(i).u, 0.0, dx(), x) - base_.u;
}
double PeriodicSolution::tilde_E(int i, double x) const {
  if (caps_.at(i).t == 0.0) return pert_.eval(2, x);
  return torus_interp(caps_.at(i).E, 0.0, dx(), x) - E_base_;
}
double PeriodicSolution::tilde_theta(int i, double x) const {
  if (caps_.at(i).t == 0.0) {
    // exact conversion of the conservative offsets at t = 0
    const GasParams& g = solver_.gas();
    const double u = base_.u + pert_.eval(1, x);
    const double E = E_base_ + pert_.eval(2, x);
    return theta_from_conservative(g, base_.v, u, E) - base_.theta;
  }
  return torus_interp(caps_.at(i).theta, 0.0, dx(), x) - base_.theta;
}

ThermoState PeriodicSolution::state_at(double x, double t) {
  const double slack =
      std::max(1e-9 * std::max(1.0, std::abs(t)), 2.0 * solver_.last_dt());
  if (t > solver_.time())
    solver_.advance_to(t);
  else if (t < solver_.time() - slack)
    throw NumericError("state_at: data requested behind the live solution");
  const std::vector<double> vs = solver_.v(), us = solver_.u(), Es = solver_.total_energy();
  const double v = torus_interp(vs, 0.0, dx(), x);
  const double u = torus_interp(us, 0.0, dx(), x);
  const double E = torus_interp(Es, 0.0, dx(), x);
  const double th = theta_from_conservative(solver_.gas(), v, u, E);
  if (!(v > 0.0) || !(th > 0.0)) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "state_at: interpolated state lost positivity at x=%.6g, t=%.6g", x, t);
    throw NumericError(buf);
  }
  return {v, u, th};
}

std::vector<double> PeriodicSolution::tilde_field(int i, int comp) const {
  const TorusCapture& c = caps_.at(i);
  const std::vector<double>& f = comp == 0 ? c.v : (comp == 1 ? c.u : c.E);
  const double ref = comp == 0 ? base_.v : (comp == 1 ? base_.u : E_base_);
  std::vector<double> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = f[j] - ref;
  return out;
}

double PeriodicSolution::linf(int i, int comp) const {
  if (comp < 0 || comp > 2) throw DomainError("linf: component must be 0..2");
  return sup_abs(tilde_field(i, comp));
}

double PeriodicSolution::w2inf(int i) const {
  double m = 0.0;
  for (int comp = 0; comp < 3; ++comp)
    m = std::max(m, w2inf_periodic(tilde_field(i, comp), dx()));
  return m;
}

double PeriodicSolution::conservation_drift() const {
  const Conserved cur = solver_.totals();
  const double dm = std::abs(cur.mass - totals0_.mass) / std::max(1.0, std::abs(totals0_.mass));
  const double dp =
      std::abs(cur.momentum - totals0_.momentum) / std::max(1.0, std::abs(totals0_.momentum));
  const double de =
      std::abs(cur.energy - totals0_.energy) / std::max(1.0, std::abs(totals0_.energy));
  return std::max({dm, dp, de});
}

DecayEstimate estimate_decay(const PeriodicSolution& sol, DecayNorm kind) {
  const int n = sol.n_captures();
  if (n < 3) throw DomainError("estimate_decay: need at least 3 captures");
  const double T = sol.at(n - 1).t;
  const double t_begin = 0.25 * T - 1e-12 * std::max(1.0, T);
  std::vector<double> ts, ys;
  for (int i = 0; i < n; ++i) {
    if (sol.at(i).t < t_begin) continue;
    ts.push_back(sol.at(i).t);
    double y;
    if (kind == DecayNorm::linf) {
      y = std::max({sol.linf(i, 0), sol.linf(i, 1), sol.linf(i, 2)});
    } else {
      y = sol.w2inf(i);
    }
    ys.push_back(y);
  }
  const double floor_abs = kind == DecayNorm::linf ? kLinfFloor : kW2infFloor;
  const DecayFit f = fit_exponential(ts, ys, floor_abs);
  DecayEstimate d;
  d.alpha_hat = 0.5 * f.rate;
  d.c_hat = f.prefactor;
  d.r2 = f.r2;
  d.raw_rate = f.rate;
  d.points = f.points;
  d.underflow = f.underflow;
  return d;
}

double slowest_linear_rate(const GasParams& g, const ThermoState& base, int k,
                           double period) {
  wavecomp::validate(g);
  wavecomp::validate(base, "base state");
  if (k < 1) throw DomainError("slowest_linear_rate: mode number must be >= 1");
  if (!(period > 0.0)) throw DomainError("slowest_linear_rate: period must be positive");
  const double w = 2.0 * M_PI * k / period;
  const double w2 = w * w, w4 = w2 * w2;
  const double p = pressure(g, base);
  const double kp = g.kappa * (g.gamma - 1.0) / g.R;  // temperature diffusivity numerator
  const double a = w2 * (g.mu + kp) / base.v;
  const double b = g.gamma * p * w2 / base.v + g.mu * kp * w4 / (base.v * base.v);
  const double c = kp * p * w4 / (base.v * base.v);
  // The real root nearest zero: Newton from the small-root estimate -c/b.
  auto f = [&](double x) { return ((x + a) * x + b) * x + c; };
  auto df = [&](double x) { return (3.0 * x + 2.0 * a) * x + b; };
  double r = -c / b;
  for (int it = 0; it < 100; ++it) {
    const double step = f(r) / df(r);
    r -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(r))) break;
  }
  // Deflate and take the smallest damping rate over all three roots.
  const double B = a + r, C = b + r * B;
  double rate = std::abs(r);
  const double disc = B * B - 4.0 * C;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    rate = std::min({rate, std::abs(0.5 * (-B + sq)), std::abs(0.5 * (-B - sq))});
  } else {
    rate = std::min(rate, std::abs(0.5 * B));
  }
  return rate;
}

}  // namespace wavecomp
