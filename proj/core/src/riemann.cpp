#include "wavecomp/riemann.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <string>

#include "wavecomp/quad.hpp"

namespace wavecomp {

namespace {

// int_{va}^{vb} lambda_family(eta) deta on the isentrope K.
double curve_integral(double gamma, double K, int family, double va, double vb) {
  return integrate(
      [gamma, K, family](double eta) {
        return lambda_isentrope(gamma, K, family, eta);
      },
      va, vb, 1e-12);
}

}  // namespace

ThermoState rarefaction_connect(const GasParams& g, int family,
                                const ThermoState& anchor, double v_target,
                                CurveMode mode) {
  validate(g);
  validate(anchor, "rarefaction_connect: anchor");
  if (family != 1 && family != 3)
    throw DomainError("rarefaction_connect: family must be 1 or 3, got " +
                      std::to_string(family));
  if (!(v_target > 0.0) || !std::isfinite(v_target))
    throw DomainError("rarefaction_connect: target volume must be positive, got " +
                      std::to_string(v_target));
  if (mode == CurveMode::wave && v_target < anchor.v * (1.0 - 1e-14))
    throw DomainError(
        "rarefaction_connect: compressive traversal (v_target < anchor.v) is not "
        "a rarefaction; use CurveMode::curve to follow the integral curve");

  const double K = pressure(g, anchor) * std::pow(anchor.v, g.gamma);
  ThermoState out;
  out.v = v_target;
  out.theta = K * std::pow(v_target, -g.gamma) * v_target / g.R;  // p v / R
  out.u = anchor.u - curve_integral(g.gamma, K, family, anchor.v, v_target);
  return out;
}

WavePattern solve_pattern(const GasParams& g, const ThermoState& left,
                          const ThermoState& right, double tol) {
  validate(g);
  validate(left, "solve_pattern: left");
  validate(right, "solve_pattern: right");

  WavePattern w;
  w.left = left;
  w.right = right;
  w.s_left = entropy(g, left);
  w.s_right = entropy(g, right);
  const double pL = pressure(g, left);
  const double pR = pressure(g, right);
  w.K_left = pL * std::pow(left.v, g.gamma);
  w.K_right = pR * std::pow(right.v, g.gamma);
  const double p_min = std::min(pL, pR);
  const double p_max = std::max(pL, pR);

  // Velocity reached by each curve when the pressure drops to p; the
  // difference f(p) = u_from_left - u_from_right decreases in p.
  const auto u_from_left = [&](double p) {
    const double v = std::pow(w.K_left / p, 1.0 / g.gamma);
    return left.u - curve_integral(g.gamma, w.K_left, 1, left.v, v);
  };
  const auto u_from_right = [&](double p) {
    const double v = std::pow(w.K_right / p, 1.0 / g.gamma);
    return right.u - curve_integral(g.gamma, w.K_right, 3, right.v, v);
  };
  const auto f = [&](double p) { return u_from_left(p) - u_from_right(p); };

  const double u_scale =
      std::max({1.0, std::abs(left.u), std::abs(right.u),
                std::abs(lambda_isentrope(g.gamma, w.K_left, 1, left.v)),
                std::abs(lambda_isentrope(g.gamma, w.K_right, 3, right.v))});

  double p_hi = p_max;
  double f_hi = f(p_hi);
  if (f_hi > tol * u_scale)
    throw PatternError(
        "solve_pattern: data requires a compressive wave (velocity mismatch " +
        std::to_string(f_hi) + " > 0 at p = max(p_left, p_right))");

  // Vacuum check: as p -> 0 both curve velocities approach finite limits
  // (the escape integrals converge); no meeting point exists if the limit of
  // f stays negative.
  const double escape_l = -integrate_to_inf(
      [&](double eta) { return lambda_isentrope(g.gamma, w.K_left, 1, eta); },
      left.v, 1e-12);
  const double escape_r = integrate_to_inf(
      [&](double eta) { return lambda_isentrope(g.gamma, w.K_right, 3, eta); },
      right.v, 1e-12);
  if (left.u + escape_l - (right.u - escape_r) < tol * u_scale)
    throw PatternError(
        "solve_pattern: data opens a vacuum (curves do not meet at any "
        "positive pressure)");

  // Bracket downward: f increases as p decreases; stop once f >= 0.
  double p_lo = p_min * 1e-3;
  double f_lo = f(p_lo);
  while (f_lo < 0.0) {
    if (p_lo < 1e-280)
      throw NumericError("solve_pattern: bracket expansion failed");
    p_lo *= 1e-3;
    f_lo = f(p_lo);
  }

  // Safeguarded secant/bisection for the root of f in [p_lo, p_hi].
  double ps = 0.5 * (p_lo + p_hi);
  for (int it = 0; it < 200 && (p_hi - p_lo) > tol * p_hi; ++it) {
    double cand = p_hi - f_hi * (p_hi - p_lo) / (f_hi - f_lo);  // secant
    const double width = p_hi - p_lo;
    if (!(cand > p_lo + 0.01 * width) || !(cand < p_hi - 0.01 * width))
      cand = 0.5 * (p_lo + p_hi);
    const double fc = f(cand);
    if (fc >= 0.0) {
      p_lo = cand;
      f_lo = fc;
    } else {
      p_hi = cand;
      f_hi = fc;
    }
    ps = cand;
  }
  ps = 0.5 * (p_lo + p_hi);

  if (ps > p_min * (1.0 + 1e-9))
    throw PatternError(
        "solve_pattern: middle pressure " + std::to_string(ps) +
        " exceeds min(p_left, p_right) = " + std::to_string(p_min) +
        "; the exact solution contains a shock");
  ps = std::min(ps, p_min);
  w.p_star = ps;

  w.mid_left.v = std::pow(w.K_left / ps, 1.0 / g.gamma);
  w.mid_left.theta = ps * w.mid_left.v / g.R;
  w.mid_right.v = std::pow(w.K_right / ps, 1.0 / g.gamma);
  w.mid_right.theta = ps * w.mid_right.v / g.R;
  const double uL = u_from_left(ps);
  const double uR = u_from_right(ps);
  if (std::abs(uL - uR) > 1e-8 * u_scale)
    throw NumericError("solve_pattern: curve velocities disagree at p_star by " +
                       std::to_string(uL - uR));
  w.mid_left.u = w.mid_right.u = 0.5 * (uL + uR);

  w.lam1_head = lambda_isentrope(g.gamma, w.K_left, 1, left.v);
  w.lam1_tail = lambda_isentrope(g.gamma, w.K_left, 1, w.mid_left.v);
  w.lam3_tail = lambda_isentrope(g.gamma, w.K_right, 3, w.mid_right.v);
  w.lam3_head = lambda_isentrope(g.gamma, w.K_right, 3, right.v);

  const double str1 = (w.mid_left.v - left.v) / left.v;
  const double str3 = (w.mid_right.v - right.v) / right.v;
  w.contact_only = str1 <= 1e-10 && str3 <= 1e-10;
  return w;
}

ThermoState sample_pattern(const GasParams& g, const WavePattern& w, double xi) {
  if (xi <= w.lam1_head) return w.left;
  if (xi < w.lam1_tail) {
    ThermoState s;
    s.v = volume_at_lambda(g.gamma, w.K_left, xi);
    s.theta = w.K_left * std::pow(s.v, 1.0 - g.gamma) / g.R;
    s.u = w.left.u - integrate(
                         [&](double eta) {
                           return lambda_isentrope(g.gamma, w.K_left, 1, eta);
                         },
                         w.left.v, s.v, 1e-12);
    return s;
  }
  if (xi < 0.0) return w.mid_left;
  if (xi < w.lam3_tail) return w.mid_right;
  if (xi <= w.lam3_head) {
    ThermoState s;
    s.v = volume_at_lambda(g.gamma, w.K_right, xi);
    s.theta = w.K_right * std::pow(s.v, 1.0 - g.gamma) / g.R;
    s.u = w.right.u - integrate(
                          [&](double eta) {
                            return lambda_isentrope(g.gamma, w.K_right, 3, eta);
                          },
                          w.right.v, s.v, 1e-12);
    return s;
  }
  return w.right;
}

ThermoState right_state_for_delta(const GasParams& g, const ThermoState& left,
                                  double delta, double a_r) {
  validate(g);
  validate(left, "right_state_for_delta: left");
  if (!(a_r > 0.0))
    throw DomainError("right_state_for_delta: a_r must be positive");
  if (!(a_r * std::abs(delta) < 1.0))
    throw DomainError(
        "right_state_for_delta: a_r*|delta| must be below 1, got " +
        std::to_string(a_r * std::abs(delta)));

  const double pL = pressure(g, left);
  const double drop = 1.0 - a_r * std::abs(delta);
  const double ps = pL * drop;    // middle pressure
  const double pRight = ps / drop;  // equals pL: symmetric pressure drop

  // Left middle state via the 1-rarefaction from `left` down to ps.
  const double KL = pL * std::pow(left.v, g.gamma);
  const double v_mid_left = std::pow(KL / ps, 1.0 / g.gamma);
  const ThermoState mid_left = rarefaction_connect(g, 1, left, v_mid_left);

  // Right middle state: fix its temperature through the contact jump, then
  // climb the 3-isentrope back up to pRight.
  const double theta_right = left.theta + delta;
  if (!(theta_right > 0.0))
    throw DomainError("right_state_for_delta: delta drives temperature negative");
  const double theta_mid_right =
      theta_right * std::pow(ps / pRight, (g.gamma - 1.0) / g.gamma);
  ThermoState mid_right;
  mid_right.v = g.R * theta_mid_right / ps;
  mid_right.theta = theta_mid_right;
  mid_right.u = mid_left.u;

  const double KR = ps * std::pow(mid_right.v, g.gamma);
  const double v_right = std::pow(KR / pRight, 1.0 / g.gamma);
  // Traverse the 3-curve from the middle state down in volume to the outer
  // state (compressive direction along the curve, hence CurveMode::curve).
  ThermoState right = rarefaction_connect(g, 3, mid_right, v_right, CurveMode::curve);
  return right;
}

Region classify_region(const GasParams& g, const WavePattern& w, double x,
                       double t) {
  const double lam_m = lambda_isentrope(g.gamma, w.K_left, 1, w.mid_left.v);
  const double lam_p = lambda_isentrope(g.gamma, w.K_right, 3, w.mid_right.v);
  if (2.0 * x < lam_m * t) return Region::minus_far;
  if (2.0 * x > lam_p * t) return Region::plus_far;
  return Region::contact_zone;
}

}  // namespace wavecomp
