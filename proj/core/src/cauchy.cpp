#include "wavecomp/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "wavecomp/error.hpp"

namespace wavecomp {

namespace {

SolverOptions line_options(const CauchyOptions& o) {
  SolverOptions s;
  s.cfl = o.cfl;
  s.scheme = o.scheme;
  return s;
}

}  // namespace

CauchyRun::CauchyRun(const GasParams& g, const CompositeWave& cw,
                     const PeriodicPerturbation& pert, const CauchyOptions& opt)
    : cw_(&cw),
      pert_(pert),
      opt_(opt),
      pm_(g, cw.pattern().left, pert, opt.torus_cells),
      pp_(g, cw.pattern().right, pert, opt.torus_cells),
      pom_(g, cw.pattern().mid_left, pert, opt.torus_cells),
      pop_(g, cw.pattern().mid_right, pert, opt.torus_cells),
      af_(cw, pm_, pp_, pom_, pop_),
      line_(g, opt.x_min, (opt.x_max - opt.x_min) / std::max(opt.cells, 1),
            opt.cells, line_options(opt)) {
  if (opt.cells < 16 || !(opt.x_max > opt.x_min))
    throw DomainError("cauchy: need at least 16 cells and x_max > x_min");

  const int n = opt.cells;
  std::vector<double> v0(n), u0(n), th0(n);
  for (int i = 0; i < n; ++i) {
    const double x = line_.center(i);
    const ThermoState base{cw.v(x, 0.0), cw.u(x, 0.0), cw.theta(x, 0.0)};
    const double vv = base.v + pert_.eval(0, x);
    const double uu = base.u + pert_.eval(1, x);
    const double EE = wavecomp::total_energy(g, base) + pert_.eval(2, x);
    const double th = theta_from_conservative(g, vv, uu, EE);
    if (!(vv > 0.0) || !(th > 0.0)) {
      char buf[112];
      std::snprintf(buf, sizeof buf,
                    "cauchy: perturbation drives v or theta nonpositive at x = %.6g",
                    x);
      throw DomainError(buf);
    }
    v0[i] = vv;
    u0[i] = uu;
    th0[i] = th;
  }
  line_.set_initial(v0, u0, th0);
  totals0_ = line_.totals();

  const double xm = 0.5 * (opt.x_min + opt.x_max);
  line_.set_boundary([this, xm](double x, double t) {
    return (x < xm) ? pm_.state_at(x, t) : pp_.state_at(x, t);
  });
}

void CauchyRun::fan_guard(double t) const {
  if (t <= 0.0) return;
  const WavePattern& pat = cw_->pattern();
  if (pat.contact_only) return;  // no fan to reach the boundary
  const double widen = 8.0 * std::sqrt(1.0 + t);
  const double margin = 10.0 * line_.dx();
  const double left_edge = pat.lam1_head * t - widen;
  const double right_edge = pat.lam3_head * t + widen;
  if (left_edge < opt_.x_min + margin || right_edge > opt_.x_max - margin) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "cauchy: fan reaches the boundary by t = %.6g; domain too small",
                  t);
    throw DomainError(buf);
  }
}

ThermoState CauchyRun::inviscid(double x, double t) const {
  const RarefactionWave& r = (x < 0.0) ? cw_->rare1() : cw_->rare3();
  return ThermoState{r.v(x, t), r.u(x, t), r.theta(x, t)};
}

CheckRow CauchyRun::measure(double t) {
  fan_guard(t);
  line_.advance_to(t);
  const double tc = line_.time();
  const std::vector<double> when{tc};
  pm_.capture(when);
  pp_.capture(when);
  pom_.capture(when);
  pop_.capture(when);
  const int cap = af_.find_capture(tc);
  if (cap < 0) throw NumericError("cauchy: checkpoint capture not found");

  const int n = line_.cells();
  std::vector<double> phi(n), psi(n), zeta(n);
  CheckRow row;
  row.t = tc;
  const WavePattern& pat = cw_->pattern();
  const double win_out =
      0.9 * std::max(std::abs(pat.lam1_head), pat.lam3_head) * tc;
  const double win_in = 4.0 * std::sqrt(1.0 + tc);
  for (int i = 0; i < n; ++i) {
    const double x = line_.center(i);
    const ThermoState a = af_.eval(x, cap);
    phi[i] = line_.v_at(i) - a.v;
    psi[i] = line_.u_at(i) - a.u;
    zeta[i] = line_.theta_at(i) - a.theta;
    row.sup_ansatz = std::max(
        {row.sup_ansatz, std::abs(phi[i]), std::abs(psi[i]), std::abs(zeta[i])});
    const double ax = std::abs(x);
    if (tc > 0.0 && ax >= win_in && ax <= win_out) {
      const ThermoState r = inviscid(x, tc);
      row.sup_riemann = std::max({row.sup_riemann,
                                  std::abs(line_.v_at(i) - r.v),
                                  std::abs(line_.u_at(i) - r.u),
                                  std::abs(line_.theta_at(i) - r.theta)});
      row.riemann_window = true;
    }
  }
  const double dx = line_.dx();
  row.h1_sq_pert = h1_sq(phi, dx) + h1_sq(psi, dx) + h1_sq(zeta, dx);
  row.l2_pert = std::sqrt(l2_sq(phi, dx) + l2_sq(psi, dx) + l2_sq(zeta, dx));
  return row;
}

double CauchyRun::initial_identity_error() {
  if (line_.time() != 0.0)
    throw NumericError("cauchy: start-time identity requires an unadvanced run");
  const std::vector<double> when{0.0};
  pm_.capture(when);
  pp_.capture(when);
  pom_.capture(when);
  pop_.capture(when);
  const int cap = af_.find_capture(0.0);
  const GasParams& g = line_.gas();
  const double gm = (g.gamma - 1.0) / g.R;
  double worst = 0.0;
  for (int i = 0; i < line_.cells(); ++i) {
    const double x = line_.center(i);
    const ThermoState a = af_.eval(x, cap);
    const double zeta0 = line_.theta_at(i) - a.theta;
    const double want = -gm * pert_.eval(1, x) * af_.oscillation_factor(x);
    worst = std::max({worst, std::abs(line_.v_at(i) - a.v),
                      std::abs(line_.u_at(i) - a.u), std::abs(zeta0 - want)});
  }
  return worst;
}

AuditReport CauchyRun::audit() const {
  const Conserved now = line_.totals();
  const BoundaryFluxes& bf = line_.boundary_fluxes();
  AuditReport r;
  r.change.mass = now.mass - totals0_.mass;
  r.change.momentum = now.momentum - totals0_.momentum;
  r.change.energy = now.energy - totals0_.energy;
  r.expected.mass = bf.right.mass - bf.left.mass;
  r.expected.momentum = bf.right.momentum - bf.left.momentum;
  r.expected.energy = bf.right.energy - bf.left.energy;
  r.rel_mass = std::abs(r.change.mass - r.expected.mass) /
               std::max(1.0, std::abs(totals0_.mass));
  r.rel_momentum = std::abs(r.change.momentum - r.expected.momentum) /
                   std::max(1.0, std::abs(totals0_.momentum));
  r.rel_energy = std::abs(r.change.energy - r.expected.energy) /
                 std::max(1.0, std::abs(totals0_.energy));
  return r;
}

std::vector<double> CauchyRun::pert_field(int cap, int comp) const {
  if (comp < 0 || comp > 2) throw DomainError("pert_field: comp must be 0..2");
  const int n = line_.cells();
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    const double x = line_.center(i);
    const ThermoState a = af_.eval(x, cap);
    out[i] = (comp == 0)   ? line_.v_at(i) - a.v
             : (comp == 1) ? line_.u_at(i) - a.u
                           : line_.theta_at(i) - a.theta;
  }
  return out;
}

}  // namespace wavecomp
