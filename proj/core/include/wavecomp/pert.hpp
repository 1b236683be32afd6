// Periodic perturbations of a constant state and their viscous evolution on
// the torus: zero-mean trigonometric data for (v, u, E), exact Sobolev-3
// sizing, snapshotted solutions, and decay-rate extraction.
#pragma once

#include <array>
#include <vector>

#include "wavecomp/fitting.hpp"
#include "wavecomp/nskernel.hpp"

namespace wavecomp {

// One Fourier mode k >= 1 on a period-1 cell:
//   amp_cos * cos(2 pi k x) + amp_sin * sin(2 pi k x).
struct ModeSpec {
  int k = 1;
  double amp_cos = 0.0;
  double amp_sin = 0.0;
};

// Triple (phi1, phi2, phi3) of zero-mean trigonometric polynomials offsetting
// the conservative fields (v, u, E).  All norms and derivatives are exact in
// the mode amplitudes; there is no k = 0 term, so the cell means of the
// perturbed fields equal the base values.
struct PeriodicPerturbation {
  double period = 1.0;
  std::array<std::vector<ModeSpec>, 3> modes;

  void validate() const;  // period > 0, every k >= 1
  bool zero() const;
  double eval(int comp, double x) const;              // comp = 0, 1, 2
  double deriv(int comp, double x, int order) const;  // order = 0..3
  // sqrt(sum over components of |phi|^2 + |phi'|^2 + |phi''|^2 + |phi'''|^2),
  // each square integral evaluated exactly from the amplitudes.
  double h3_norm() const;
  void rescale(double eps1);  // scale amplitudes so h3_norm() == eps1
};

// Fiducial two-mode shape used by the drivers, scaled to size eps1.
PeriodicPerturbation default_perturbation(double eps1);

// Cell-centered initial data on [0, period): conservative fields offset by the
// perturbation, then converted back to (v, u, theta) exactly.  Throws
// DomainError when the offset volume or temperature is not positive.
void build_initial_data(const GasParams& g, const ThermoState& base,
                        const PeriodicPerturbation& pert, int cells,
                        std::vector<double>& v0, std::vector<double>& u0,
                        std::vector<double>& theta0);

struct TorusCapture {
  double t = 0.0;
  std::vector<double> v, u, E, theta;
};

enum class DecayNorm { linf, w2inf };

// Round-off floors under which a norm history is treated as noise.
inline constexpr double kLinfFloor = 1e-12;
inline constexpr double kW2infFloor = 1e-9;

// One perturbed solution around a constant state, advanced on the torus and
// snapshotted at caller-chosen times.  Also serves as a live ghost-data
// source for truncated-domain runs (state_at co-advances the solver).
class PeriodicSolution {
 public:
  PeriodicSolution(const GasParams& g, const ThermoState& base,
                   const PeriodicPerturbation& pert, int cells,
                   TimeScheme scheme = TimeScheme::strang_cn, double cfl = 0.4);

  const ThermoState& base() const { return base_; }
  double base_energy() const { return E_base_; }
  const PeriodicPerturbation& perturbation() const { return pert_; }
  int cells() const { return solver_.cells(); }
  double dx() const { return solver_.dx(); }
  double period() const { return pert_.period; }
  NsSolver& solver() { return solver_; }
  const NsSolver& solver() const { return solver_; }

  // Advance to each time in turn (nondecreasing) and snapshot the fields.
  void capture(const std::vector<double>& times);
  int n_captures() const { return static_cast<int>(caps_.size()); }
  const TorusCapture& at(int i) const { return caps_.at(i); }

  // Deviations from the base state on capture i, cubic-interpolated in x.
  // A capture at t = 0 evaluates the initial perturbation analytically, so
  // algebraic identities on the initial data hold to round-off.
  double tilde_v(int i, double x) const;
  double tilde_u(int i, double x) const;
  double tilde_E(int i, double x) const;
  double tilde_theta(int i, double x) const;
  int find_capture(double t, double tol = 1e-9) const;  // -1 if absent

  // Primitive state at (x, t) from the live fields, advancing the solver when
  // t is ahead of it; t behind the solver by more than a step is an error.
  ThermoState state_at(double x, double t);

  // Norms of the deviation fields on capture i.
  double linf(int i, int comp) const;  // comp = 0, 1, 2 -> v, u, E
  double w2inf(int i) const;           // max over the three fields
  // Largest relative drift of (mass, momentum, energy) totals since t = 0.
  double conservation_drift() const;

 private:
  std::vector<double> tilde_field(int i, int comp) const;

  ThermoState base_;
  double E_base_ = 0.0;
  PeriodicPerturbation pert_;
  NsSolver solver_;
  Conserved totals0_;
  std::vector<TorusCapture> caps_;
};

struct DecayEstimate {
  double alpha_hat = 0.0;  // half the fitted norm exponent
  double c_hat = 0.0;      // fitted prefactor
  double r2 = 0.0;
  double raw_rate = 0.0;   // exponent of the norm itself: ||.|| ~ C e^{-raw t}
  int points = 0;
  bool underflow = false;  // window truncated or emptied by the noise floor
};

// Least-squares fit of log ||deviation(t)|| over the last three quarters of
// the captured history, with the per-norm round-off floor truncating the
// window.  The norm of a small perturbation decays like e^{-2 alpha t}, so
// alpha_hat is half the fitted exponent.
DecayEstimate estimate_decay(const PeriodicSolution& sol, DecayNorm kind);

// Decay rate |Re lambda| of the slowest mode of the viscous system linearized
// at a constant state, for wavenumber 2 pi k / period: the roots of
//   lambda^3 + a lambda^2 + b lambda + c = 0
// with a = w^2 (mu + kappa (gamma-1)/R) / v,  b = gamma p w^2 / v
//   + mu kappa (gamma-1) w^4 / (R v^2),  c = kappa (gamma-1) p w^4 / (R v^2),
// w = 2 pi k / period.  Reference value for fitted raw rates.
double slowest_linear_rate(const GasParams& g, const ThermoState& base, int k,
                           double period = 1.0);

}  // namespace wavecomp
