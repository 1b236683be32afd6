// Two-rarefactions-plus-contact wave patterns for the polytropic system.
//
// Rarefaction curves are traversed at fixed entropy: along the family-i curve
// anchored at (va, ua) the velocity is u(v) = ua - int_{va}^{v} lambda_i(eta) deta
// with lambda_i(eta) = -+ sqrt(gamma K) eta^{-(gamma+1)/2}, K = p v^gamma the
// isentrope constant.  solve_pattern root-finds the middle pressure p_star
// matching the two curves and rejects data whose solution needs a shock.
#pragma once

#include <cmath>

#include "wavecomp/gas.hpp"

namespace wavecomp {

// Traversal policy for rarefaction_connect: `wave` insists on the admissible
// (expansive, v increasing) side and throws DomainError otherwise; `curve`
// follows the integral curve in either direction.
enum class CurveMode { wave, curve };

// lambda_i on the isentrope K = p v^gamma.
inline double lambda_isentrope(double gamma, double K, int family, double v) {
  const double c = std::sqrt(gamma * K) * std::pow(v, -0.5 * (gamma + 1.0));
  return family == 1 ? -c : (family == 3 ? c : 0.0);
}

// Specific volume where lambda_i(v) equals w on the isentrope (closed form).
inline double volume_at_lambda(double gamma, double K, double w) {
  return std::pow(gamma * K / (w * w), 1.0 / (gamma + 1.0));
}

// State on the family-i rarefaction curve through `anchor` at volume v_target.
ThermoState rarefaction_connect(const GasParams& g, int family,
                                const ThermoState& anchor, double v_target,
                                CurveMode mode = CurveMode::wave);

struct WavePattern {
  ThermoState left, right;          // prescribed outer data
  ThermoState mid_left, mid_right;  // states flanking the contact
  double p_star = 0.0;              // middle-region pressure
  double s_left = 0.0, s_right = 0.0;
  double K_left = 0.0, K_right = 0.0;  // isentrope constants p v^gamma
  // Fan edge speeds: the 1-fan spans [lam1_head, lam1_tail] <= 0 and the 3-fan
  // spans 0 <= [lam3_tail, lam3_head].
  double lam1_head = 0.0, lam1_tail = 0.0;
  double lam3_tail = 0.0, lam3_head = 0.0;
  bool contact_only = false;  // both fans have zero strength
};

// Solve for the 1-rarefaction / contact / 3-rarefaction pattern joining the
// given data.  Throws PatternError if the exact solution contains a shock or a
// vacuum, DomainError on invalid states.
WavePattern solve_pattern(const GasParams& g, const ThermoState& left,
                          const ThermoState& right, double tol = 1e-12);

// Self-similar inviscid solution sampled at speed xi = x/t.  Right-continuous
// at the contact (xi = 0 returns mid_right).
ThermoState sample_pattern(const GasParams& g, const WavePattern& w, double xi);

// Manufacture a right state so that (left, right) solves to the two-rarefaction
// pattern with contact temperature jump theta_right - theta_left = delta and
// middle pressure p_star = p(left) * (1 - a_r*|delta|).  The outer pressures
// come out equal.  Requires a_r*|delta| < 1.
ThermoState right_state_for_delta(const GasParams& g, const ThermoState& left,
                                  double delta, double a_r = 2.0);

// Space-time partition around the composite pattern: the outer regions open
// at half the fan edge speeds, everything between belongs to the contact zone.
enum class Region { minus_far, contact_zone, plus_far };

// minus_far iff 2x < lam1(mid_left)*t, plus_far iff 2x > lam3(mid_right)*t,
// contact_zone otherwise (both boundaries included).
Region classify_region(const GasParams& g, const WavePattern& w, double x,
                       double t);

}  // namespace wavecomp
