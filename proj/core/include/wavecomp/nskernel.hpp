// Conservative finite-difference solver for the 1-D viscous system in
// Lagrangian (mass) coordinates, on a periodic cell or on a truncated line
// with ghost data supplied by a caller callback:
//
//   v_t - u_x = 0
//   u_t + p_x = mu (u_x / v)_x
//   E_t + (p u)_x = kappa (theta_x / v)_x + mu (u u_x / v)_x,
//
// E = R theta/(gamma-1) + u^2/2, p = R theta / v.  Space: second-order
// central differences written in face-flux form, so cell totals telescope
// exactly (including round-off) on the torus.  Time: either the fully
// explicit SSP-RK2 with the acoustic+diffusive CFL rule, or a Strang-split
// scheme (explicit RK2 advection + Crank-Nicolson diffusion in flux form)
// whose step is limited by the acoustic CFL only -- the practical choice
// when mu dt / dx^2 would be in the thousands.
#pragma once

#include <functional>
#include <vector>

#include "wavecomp/gas.hpp"

namespace wavecomp {

enum class TimeScheme { explicit_rk2, strang_cn };

struct SolverOptions {
  double cfl = 0.4;
  TimeScheme scheme = TimeScheme::explicit_rk2;
};

struct Conserved {
  double mass = 0.0;      // dx * sum v
  double momentum = 0.0;  // dx * sum u
  double energy = 0.0;    // dx * sum E
};

// Time-integrated face fluxes at the two domain edges, accumulated with the
// same stage weights the update uses, so on a truncated line
//   totals(T) - totals(0) == right - left
// holds to round-off.  (On the torus both edges see the same face and the
// difference telescopes to zero.)
struct BoundaryFluxes {
  Conserved left, right;
};

// Primitive boundary data (v, u, theta) at (x, t) for the ghost cells of a
// truncated domain.  Absent callback = periodic wrap.
using BoundaryFn = std::function<ThermoState(double x, double t)>;

class NsSolver {
 public:
  NsSolver(const GasParams& g, double x0, double dx, int n,
           const SolverOptions& opts = {});

  // Cell-centered primitive data, i = 0..n-1 at x0 + (i+1/2) dx; resets t=0.
  void set_initial(const std::vector<double>& v, const std::vector<double>& u,
                   const std::vector<double>& theta);
  void set_boundary(BoundaryFn fn);

  void advance_to(double t_end);

  double time() const { return t_; }
  long steps() const { return steps_; }
  double last_dt() const { return last_dt_; }
  int cells() const { return n_; }
  double x0() const { return x0_; }
  double dx() const { return dx_; }
  double center(int i) const { return x0_ + (i + 0.5) * dx_; }
  const GasParams& gas() const { return gas_; }
  const SolverOptions& options() const { return opts_; }

  double v_at(int i) const { return v_[i + 1]; }
  double u_at(int i) const { return u_[i + 1]; }
  double energy_at(int i) const { return E_[i + 1]; }
  double theta_at(int i) const;

  std::vector<double> v() const;
  std::vector<double> u() const;
  std::vector<double> total_energy() const;
  std::vector<double> theta() const;

  // Kahan-compensated, dx-weighted cell totals.
  Conserved totals() const;

  const BoundaryFluxes& boundary_fluxes() const { return bflux_; }

 private:
  using Array = std::vector<double>;  // n+2 entries, ghosts at 0 and n+1

  void fill_ghosts(Array& v, Array& u, Array& E, double t) const;
  void thermo(const Array& v, const Array& u, const Array& E, Array& iv,
              Array& th, Array& p) const;
  // Hyperbolic + (optionally) viscous face fluxes and the cell update rates.
  void rhs(const Array& v, const Array& u, const Array& E, bool viscous,
           Array& rv, Array& ru, Array& rE);
  double stable_dt() const;
  void validate_state(double t) const;

  void step_explicit(double dt);
  void step_strang(double dt);
  // Crank-Nicolson diffusion over [ta, ta+h] (v frozen); flux-form reapply.
  void diffuse(double h, double ta);
  void advect(double h, double ta);

  GasParams gas_;
  double x0_ = 0.0, dx_ = 0.0;
  int n_ = 0;
  SolverOptions opts_;
  BoundaryFn boundary_;  // empty = periodic

  double t_ = 0.0, last_dt_ = 0.0;
  long steps_ = 0;
  BoundaryFluxes bflux_;
  void tally_edges(double w);  // w * current face fluxes at edges 0 and n

  Array v_, u_, E_;
  // scratch
  Array iv_, th_, p_, v1_, u1_, E1_, rv_, ru_, rE_, rv2_, ru2_, rE2_;
  Array fv_, fu_, fE_;  // face fluxes, n+1 entries
  Array e_, ubar_, ebar_, src_, ivm_, lo_, di_, up_, rhs1_, sol_, z_, cp_;
};

}  // namespace wavecomp
