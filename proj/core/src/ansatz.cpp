#include "wavecomp/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "wavecomp/error.hpp"

namespace wavecomp {

WeightEta::WeightEta(const ContactWave& cd, double vo_minus, double vo_plus)
    : cd_(&cd), vom_(vo_minus) {
  const double dv = vo_plus - vo_minus;
  const double scale = std::max(std::abs(vo_minus), std::abs(vo_plus));
  if (std::abs(dv) <= 1e-12 * scale) {
    degen_ = true;
    dv_ = 1.0;
  } else {
    dv_ = dv;
  }
}

double WeightEta::eta(double x, double t) const {
  if (degen_) return 0.5;
  return (cd_->v(x, t) - vom_) / dv_;
}

double WeightEta::eta_x(double x, double t) const {
  if (degen_) return 0.0;
  return cd_->v_x(x, t) / dv_;
}

double WeightEta::eta_t(double x, double t) const {
  if (degen_) return 0.0;
  return cd_->v_t(x, t) / dv_;
}

EnvelopeParams make_envelope(const GasParams& g, const CompositeWave& cw,
                             double eps1) {
  const WavePattern& pat = cw.pattern();
  EnvelopeParams env;
  env.eps0 = eps1;
  env.delta = std::abs(pat.right.theta - pat.left.theta);

  double rate = slowest_linear_rate(g, pat.left, 1);
  for (const ThermoState* s : {&pat.right, &pat.mid_left, &pat.mid_right})
    rate = std::min(rate, slowest_linear_rate(g, *s, 1));
  env.alpha = 0.5 * rate;

  const ContactProfile& prof = cw.contact().profile();
  const double th_lo = std::min(prof.theta_minus(), prof.theta_plus());
  const double analytic = th_lo / (4.0 * prof.a());
  if (std::abs(prof.theta_plus() - prof.theta_minus()) <= 1e-12 * th_lo) {
    env.C2 = analytic;  // constant profile: no tail to fit
  } else {
    try {
      env.C2 = std::min(prof.gaussian_rate(-1), prof.gaussian_rate(+1));
    } catch (const std::runtime_error&) {
      env.C2 = analytic;
    }
  }

  const double l1 = std::abs(lambda_entropy(g, 1, pat.mid_left.v, pat.s_left));
  const double l3 = lambda_entropy(g, 3, pat.mid_right.v, pat.s_right);
  env.c0 = 0.1 * std::min({l1, l3, env.C2 * l1 * l1, env.C2 * l3 * l3, 1.0});
  return env;
}

AnsatzField::AnsatzField(const CompositeWave& cw, PeriodicSolution& minus,
                         PeriodicSolution& plus, PeriodicSolution& mid_minus,
                         PeriodicSolution& mid_plus)
    : cw_(&cw),
      eta_(cw.contact(), cw.pattern().mid_left.v, cw.pattern().mid_right.v),
      pm_(&minus),
      pp_(&plus),
      pom_(&mid_minus),
      pop_(&mid_plus) {}

int AnsatzField::n_captures() const {
  const int n = pm_->n_captures();
  if (pp_->n_captures() != n || pom_->n_captures() != n ||
      pop_->n_captures() != n)
    throw DomainError("ansatz: the four periodic solutions hold different capture counts");
  return n;
}

double AnsatzField::capture_time(int cap) const {
  check_cap(cap);
  return pm_->at(cap).t;
}

int AnsatzField::find_capture(double t, double tol) const {
  n_captures();
  return pm_->find_capture(t, tol);
}

void AnsatzField::check_cap(int cap) const {
  const int n = n_captures();
  if (cap < 0 || cap >= n) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "ansatz: capture %d outside [0, %d)", cap, n);
    throw DomainError(buf);
  }
  const double t = pm_->at(cap).t;
  const double tol = 1e-9 * std::max(1.0, std::abs(t));
  for (const PeriodicSolution* s : {pp_, pom_, pop_})
    if (std::abs(s->at(cap).t - t) > tol)
      throw DomainError("ansatz: capture times disagree across the four solutions");
}

ThermoState AnsatzField::eval(double x, int cap) const {
  check_cap(cap);
  const double t = pm_->at(cap).t;
  const double e = eta_.eta(x, t);
  ThermoState s;
  s.v = cw_->v(x, t) + (1.0 - e) * pm_->tilde_v(cap, x) + e * pp_->tilde_v(cap, x);
  s.u = cw_->u(x, t) + (1.0 - e) * pm_->tilde_u(cap, x) + e * pp_->tilde_u(cap, x);
  s.theta = cw_->theta(x, t) + (1.0 - e) * pm_->tilde_theta(cap, x) +
            e * pp_->tilde_theta(cap, x);
  return s;
}

ThermoState AnsatzField::eval_literal(double x, int cap) const {
  check_cap(cap);
  const double t = pm_->at(cap).t;
  const double e = eta_.eta(x, t);
  const WavePattern& pat = cw_->pattern();
  const RarefactionWave& r1 = cw_->rare1();
  const RarefactionWave& r3 = cw_->rare3();
  const ContactWave& cd = cw_->contact();
  const double uo = pat.mid_left.u;

  // deviations around the four constant states
  const double tv_m = pm_->tilde_v(cap, x), tv_p = pp_->tilde_v(cap, x);
  const double tv_om = pom_->tilde_v(cap, x), tv_op = pop_->tilde_v(cap, x);
  const double tu_m = pm_->tilde_u(cap, x), tu_p = pp_->tilde_u(cap, x);
  const double tu_om = pom_->tilde_u(cap, x), tu_op = pop_->tilde_u(cap, x);
  const double tt_m = pm_->tilde_theta(cap, x), tt_p = pp_->tilde_theta(cap, x);
  const double tt_om = pom_->tilde_theta(cap, x), tt_op = pop_->tilde_theta(cap, x);

  // each constituent wave perturbed between the states it joins, minus the
  // doubly counted perturbed middle constants
  ThermoState s;
  s.v = (r1.v(x, t) + (1.0 - e) * tv_m + e * tv_om) +
        (cd.v(x, t) + (1.0 - e) * tv_om + e * tv_op) +
        (r3.v(x, t) + (1.0 - e) * tv_op + e * tv_p) -
        (pat.mid_left.v + tv_om) - (pat.mid_right.v + tv_op);
  s.u = (r1.u(x, t) + (1.0 - e) * tu_m + e * tu_om) +
        (cd.u(x, t) + uo + (1.0 - e) * tu_om + e * tu_op) +
        (r3.u(x, t) + (1.0 - e) * tu_op + e * tu_p) -
        (uo + tu_om) - (uo + tu_op);
  s.theta = (r1.theta(x, t) + (1.0 - e) * tt_m + e * tt_om) +
            (cd.theta(x, t) + (1.0 - e) * tt_om + e * tt_op) +
            (r3.theta(x, t) + (1.0 - e) * tt_op + e * tt_p) -
            (pat.mid_left.theta + tt_om) - (pat.mid_right.theta + tt_op);
  return s;
}

double AnsatzField::oscillation_factor(double x) const {
  const WavePattern& pat = cw_->pattern();
  const double e0 = eta_.eta(x, 0.0);
  return cw_->u(x, 0.0) - (1.0 - e0) * pat.left.u - e0 * pat.right.u;
}

namespace {

struct Trapz {
  double sum = 0.0, sumsq = 0.0, sup = 0.0;
  double first = 0.0, last = 0.0;
  bool started = false;
  void add(double f) {
    const double a = std::abs(f);
    sum += a;
    sumsq += f * f;
    sup = std::max(sup, a);
    if (!started) { first = a; started = true; }
    last = a;
  }
  ResidualNorms norms(double dx) const {
    ResidualNorms n;
    n.l1 = dx * (sum - 0.5 * (first + last));
    n.l2 = std::sqrt(std::max(0.0, dx * (sumsq - 0.5 * (first * first + last * last))));
    n.linf = sup;
    return n;
  }
};

}  // namespace

ResidualTriple residuals(const AnsatzField& af, const ResidualOptions& opt,
                         int cap_lo, int cap_mid, int cap_hi) {
  if (!(opt.dx > 0.0) || !(opt.dt_res > 0.0) || !(opt.x_max > opt.x_min))
    throw DomainError("residuals: need dx > 0, dt_res > 0, x_max > x_min");
  const double t0 = af.capture_time(cap_lo);
  const double t1 = af.capture_time(cap_mid);
  const double t2 = af.capture_time(cap_hi);
  const double ttol = 1e-9 * std::max(1.0, std::abs(t1));
  if (std::abs((t1 - t0) - opt.dt_res) > ttol ||
      std::abs((t2 - t1) - opt.dt_res) > ttol)
    throw DomainError("residuals: capture triple is not spaced by dt_res");

  const int n_out = static_cast<int>(std::lround((opt.x_max - opt.x_min) / opt.dx)) + 1;
  if (n_out < 9) throw DomainError("residuals: fewer than 9 output nodes");
  const int P = 4;  // pad for the nested 5-point stencils
  const int N = n_out + 2 * P;
  const double dx = opt.dx;

  const GasParams& g = af.composite().gas();
  std::vector<double> v[3], u[3], th[3];
  for (int l = 0; l < 3; ++l) {
    v[l].resize(N);
    u[l].resize(N);
    th[l].resize(N);
    const int cap = (l == 0) ? cap_lo : (l == 1) ? cap_mid : cap_hi;
    for (int j = 0; j < N; ++j) {
      const ThermoState s = af.eval(opt.x_min + (j - P) * dx, cap);
      v[l][j] = s.v;
      u[l][j] = s.u;
      th[l][j] = s.theta;
    }
  }

  std::vector<double> p(N), ux(N, 0.0), su(N, 0.0), sth(N, 0.0);
  for (int j = 0; j < N; ++j) p[j] = g.R * th[1][j] / v[1][j];
  auto d1 = [&](const std::vector<double>& f, int j) {
    return (-f[j + 2] + 8.0 * f[j + 1] - 8.0 * f[j - 1] + f[j - 2]) / (12.0 * dx);
  };
  for (int j = 2; j < N - 2; ++j) {
    ux[j] = d1(u[1], j);
    su[j] = ux[j] / v[1][j];
    sth[j] = d1(th[1], j) / v[1][j];
  }

  ResidualTriple rt;
  rt.t = t1;
  rt.x.reserve(n_out);
  rt.F.reserve(n_out);
  rt.G.reserve(n_out);
  rt.H.reserve(n_out);
  const double inv2dt = 1.0 / (2.0 * opt.dt_res);
  const double cth = g.R / (g.gamma - 1.0);
  Trapz aF, aG, aH, aFc;
  const WeightEta& eta = af.weight();
  for (int j = P; j < N - P; ++j) {
    const double x = opt.x_min + (j - P) * dx;
    const double F = (v[2][j] - v[0][j]) * inv2dt - ux[j];
    const double G = (u[2][j] - u[0][j]) * inv2dt + d1(p, j) - g.mu * d1(su, j);
    const double H = cth * (th[2][j] - th[0][j]) * inv2dt + p[j] * ux[j] -
                     g.kappa * d1(sth, j) - g.mu * ux[j] * ux[j] / v[1][j];
    rt.x.push_back(x);
    rt.F.push_back(F);
    rt.G.push_back(G);
    rt.H.push_back(H);
    aF.add(F);
    aG.add(G);
    aH.add(H);
    // closed form of the mass defect: only the transition weight sees it
    const double fc =
        eta.eta_t(x, t1) * (af.plus().tilde_v(cap_mid, x) - af.minus().tilde_v(cap_mid, x)) -
        eta.eta_x(x, t1) * (af.plus().tilde_u(cap_mid, x) - af.minus().tilde_u(cap_mid, x));
    aFc.add(fc);
  }
  rt.nF = aF.norms(dx);
  rt.nG = aG.norms(dx);
  rt.nH = aH.norms(dx);
  rt.l1_F_closed = aFc.norms(dx).l1;

  if (opt.check_resolution) {
    ResidualOptions coarse = opt;
    coarse.dx = 2.0 * opt.dx;
    coarse.check_resolution = false;
    const ResidualTriple c = residuals(af, coarse, cap_lo, cap_mid, cap_hi);
    auto moved = [](double a, double b) {
      const double m = std::max(std::abs(a), std::abs(b));
      return m > 1e-10 && std::abs(a - b) > 0.10 * m;
    };
    if (moved(rt.nF.l1, c.nF.l1) || moved(rt.nG.l1, c.nG.l1) ||
        moved(rt.nH.l1, c.nH.l1))
      throw NumericError("residuals: L1 norms move by more than 10% under grid doubling; refine dx");
  }
  return rt;
}

SubtotalRow subtotal_norms(const CompositeWave& cw, const ResidualOptions& opt,
                           double t, const EnvelopeParams& env) {
  if (!(opt.dx > 0.0) || !(opt.x_max > opt.x_min))
    throw DomainError("subtotal_norms: need dx > 0, x_max > x_min");
  const int n = static_cast<int>(std::lround((opt.x_max - opt.x_min) / opt.dx)) + 1;
  const GasParams& g = cw.gas();
  const RarefactionWave& r1 = cw.rare1();
  const RarefactionWave& r3 = cw.rare3();
  const ContactWave& cd = cw.contact();
  const double decay_t = env.eps0 * std::exp(-2.0 * env.alpha * t);

  Trapz a2, a3, b2, b3, b4;
  for (int j = 0; j < n; ++j) {
    const double x = opt.x_min + j * opt.dx;
    const double vc = cw.v(x, t);
    const double u1x = r1.u_x(x, t), u3x = r3.u_x(x, t), ucx = cd.u_x(x, t);
    const double envv =
        std::max(decay_t, env.delta * std::exp(-env.c0 * (std::abs(x) + t)));
    a2.add(g.mu / vc * (std::abs(r1.u_xx(x, t)) + std::abs(r3.u_xx(x, t))));
    b2.add(g.kappa / vc *
           (std::abs(r1.theta_xx(x, t)) + std::abs(r3.theta_xx(x, t))));
    b4.add(u1x * u1x + u3x * u3x + ucx * ucx);
    a3.add((std::abs(cd.u_xx(x, t)) + std::abs(ucx) + std::abs(r1.v_x(x, t)) +
            std::abs(r3.v_x(x, t)) + std::abs(cd.v_x(x, t))) *
           envv);
    b3.add((std::abs(ucx) + u1x + u3x + std::abs(cd.theta_x(x, t)) +
            std::abs(r1.theta_x(x, t)) + std::abs(r3.theta_x(x, t)) +
            std::abs(cd.theta_xx(x, t)) + ucx * ucx) *
           envv);
  }
  SubtotalRow row;
  row.t = t;
  row.G2 = a2.norms(opt.dx).l1;
  row.G3 = a3.norms(opt.dx).l1;
  row.H2 = b2.norms(opt.dx).l1;
  row.H3 = b3.norms(opt.dx).l1;
  row.H4 = b4.norms(opt.dx).l1;
  return row;
}

}  // namespace wavecomp
