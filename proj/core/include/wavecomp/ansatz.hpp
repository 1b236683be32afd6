// Blend of the composite wave with the periodic deviations: a transition
// weight eta rides the contact layer's volume profile, and the blended fields
//
//   (vbar, ubar, thetabar) = composite + (1-eta) tilde_minus + eta tilde_plus
//
// interpolate between the perturbed far states while keeping the same
// oscillation frequencies as the perturbed solution.  The defect of the
// blended fields under the full viscous system (residuals F, G, H) is what
// decays, and its labeled pieces carry the provable rates.
#pragma once

#include <vector>

#include "wavecomp/composite.hpp"
#include "wavecomp/pert.hpp"

namespace wavecomp {

// eta = (v_cd(x,t) - vo_minus)/(vo_plus - vo_minus): increasing from 0 to 1
// across the contact layer.  Equal middle temperatures make the quotient 0/0;
// that degenerate mode pins eta to 1/2 with vanishing derivatives.
class WeightEta {
 public:
  WeightEta(const ContactWave& cd, double vo_minus, double vo_plus);

  bool degenerate() const { return degen_; }
  double eta(double x, double t) const;
  double eta_x(double x, double t) const;
  double eta_t(double x, double t) const;

 private:
  const ContactWave* cd_;
  double vom_ = 0.0, dv_ = 1.0;
  bool degen_ = false;
};

// Constants entering the closed-form residual envelopes.
struct EnvelopeParams {
  double eps0 = 0.0;   // perturbation size (Sobolev-3)
  double delta = 0.0;  // end-state temperature jump
  double alpha = 0.5;  // half the slowest periodic decay rate
  double c0 = 0.1;     // wave-tail exponential rate
  double C2 = 0.25;    // contact Gaussian rate
};

// alpha from the dispersion relation at the four constant states, C2 from the
// contact tails, c0 = min(acoustic speeds, C2 * their squares, 1) / 10.
EnvelopeParams make_envelope(const GasParams& g, const CompositeWave& cw, double eps1);

// The blended fields.  Holds the four periodic solutions (around the left,
// right, and the two middle states); the two middle ones cancel pointwise in
// the assembled triple, which eval_literal demonstrates against eval.
class AnsatzField {
 public:
  AnsatzField(const CompositeWave& cw, PeriodicSolution& minus,
              PeriodicSolution& plus, PeriodicSolution& mid_minus,
              PeriodicSolution& mid_plus);

  const CompositeWave& composite() const { return *cw_; }
  const WeightEta& weight() const { return eta_; }
  PeriodicSolution& minus() const { return *pm_; }
  PeriodicSolution& plus() const { return *pp_; }

  // capture schedules of the four solutions must agree
  int n_captures() const;
  double capture_time(int cap) const;
  int find_capture(double t, double tol = 1e-9) const;  // -1 if absent

  // collapsed two-tilde form (the production path)
  ThermoState eval(double x, int cap) const;
  // nine-piece assembly of the barred constituent waves (cross-check path)
  ThermoState eval_literal(double x, int cap) const;

  // The factor multiplying -phi_2 (gamma-1)/R in the initial temperature
  // perturbation: the composite velocity minus its eta-blended far values.
  double oscillation_factor(double x) const;

 private:
  void check_cap(int cap) const;

  const CompositeWave* cw_;
  WeightEta eta_;
  PeriodicSolution *pm_, *pp_, *pom_, *pop_;
};

struct ResidualOptions {
  double x_min = -40.0;
  double x_max = 40.0;
  double dx = 1.0 / 64.0;
  double dt_res = 1e-3;        // half-window of the centered time difference
  bool check_resolution = true;  // Richardson compare against a 2*dx pass
};

struct ResidualNorms {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
};

struct ResidualTriple {
  double t = 0.0;
  std::vector<double> x, F, G, H;
  ResidualNorms nF, nG, nH;
  double l1_F_closed = 0.0;  // independent closed-form evaluation of F
};

// Apply the discrete viscous operator (4th-order centered space differences,
// centered dt_res time differences of the blended fields) at the capture
// triple (cap_lo, cap_mid, cap_hi) spaced by dt_res around the middle time.
ResidualTriple residuals(const AnsatzField& af, const ResidualOptions& opt,
                         int cap_lo, int cap_mid, int cap_hi);

// L1 norms of the labeled residual pieces that depend only on the composite
// wave and the envelope constants (no captures needed):
//   G2 = mu/v (|u_r1,xx| + |u_r3,xx|),  H2 = kappa/v (|th_r1,xx| + |th_r3,xx|),
//   H4 = u_r1,x^2 + u_r3,x^2 + u_cd,x^2,
//   G3 = (|u_cd,xx| + |u_cd,x| + |v_r1,x| + |v_r3,x| + |v_cd,x|) * env,
//   H3 = (|u_cd,x| + u_r1,x + u_r3,x + |th_cd,x| + |th_r1,x| + |th_r3,x|
//         + |th_cd,xx| + u_cd,x^2) * env,
// env(x,t) = max(eps0 e^{-2 alpha t}, delta e^{-c0 (|x| + t)}).
struct SubtotalRow {
  double t = 0.0;
  double G2 = 0.0, G3 = 0.0, H2 = 0.0, H3 = 0.0, H4 = 0.0;
};

SubtotalRow subtotal_norms(const CompositeWave& cw, const ResidualOptions& opt,
                           double t, const EnvelopeParams& env);

}  // namespace wavecomp
