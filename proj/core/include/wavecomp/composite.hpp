// Superposition of the three elementary waves of a two-rarefaction pattern:
//
//   (v, u, theta) = R1 + CD + R3 - double-counted middle constants,
//
// where R1 / R3 are the exact fan solutions spreading from the origin and CD
// is the viscous contact layer on the middle pressure.  Far fields reproduce
// the end states; between the waves the composite flattens onto the middle
// states.  Mass is satisfied exactly (each summand obeys v_t = u_x); momentum
// and energy hold up to the contact sources and wave-interaction terms.
#pragma once

#include "wavecomp/burgers.hpp"
#include "wavecomp/contact.hpp"
#include "wavecomp/gas.hpp"
#include "wavecomp/riemann.hpp"

namespace wavecomp {

class CompositeWave {
 public:
  CompositeWave(const GasParams& g, const ThermoState& left,
                const ThermoState& right, const ContactOptions& copts = {});

  const GasParams& gas() const { return gas_; }
  const WavePattern& pattern() const { return pat_; }
  const ContactWave& contact() const { return cd_; }
  const RarefactionWave& rare1() const { return r1_; }
  const RarefactionWave& rare3() const { return r3_; }

  double v(double x, double t) const;
  double u(double x, double t) const;
  double theta(double x, double t) const;
  double v_x(double x, double t) const;
  double u_x(double x, double t) const;
  double theta_x(double x, double t) const;
  double v_xx(double x, double t) const;
  double u_xx(double x, double t) const;
  double theta_xx(double x, double t) const;
  double v_t(double x, double t) const;
  double u_t(double x, double t) const;
  double theta_t(double x, double t) const;

  double pressure(double x, double t) const;
  double pressure_x(double x, double t) const;

  // Pointwise defects of the full viscous system at the composite fields:
  // mass is exact; momentum and energy carry the contact sources plus the
  // interaction of the waves.
  double momentum_residual(double x, double t) const;
  double energy_residual(double x, double t) const;

 private:
  GasParams gas_;
  WavePattern pat_;
  ContactWave cd_;
  RarefactionWave r1_, r3_;
};

}  // namespace wavecomp
