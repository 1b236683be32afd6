// Ideal polytropic gas in Lagrangian (mass) coordinates.
//
// State is (v, u, theta): specific volume, velocity, temperature.
// Pressure law p = R*theta/v = A*v^-gamma * exp((gamma-1)*s/R), total energy
// E = R*theta/(gamma-1) + u^2/2.  The acoustic characteristic speeds in the
// mass coordinate are -sqrt(gamma*p/v), 0, +sqrt(gamma*p/v).
#pragma once

#include <cmath>

#include "wavecomp/error.hpp"

namespace wavecomp {

struct GasParams {
  double R = 1.0;      // gas constant
  double gamma = 5.0 / 3.0;
  double A = 1.0;      // entropy-form pressure prefactor
  double mu = 1.0;     // viscosity
  double kappa = 1.0;  // heat conductivity
};

struct ThermoState {
  double v = 1.0;
  double u = 0.0;
  double theta = 1.0;
};

void validate(const GasParams& g);
void validate(const ThermoState& s, const char* what = "state");

inline double pressure(const GasParams& g, double v, double theta) {
  return g.R * theta / v;
}
inline double pressure(const GasParams& g, const ThermoState& s) {
  return pressure(g, s.v, s.theta);
}

// p = A v^-gamma exp((gamma-1) s / R)
inline double pressure_from_entropy(const GasParams& g, double v, double s) {
  return g.A * std::pow(v, -g.gamma) * std::exp((g.gamma - 1.0) / g.R * s);
}

// s = R/(gamma-1) ln(R theta / A) + R ln v
inline double entropy(const GasParams& g, double v, double theta) {
  return g.R / (g.gamma - 1.0) * std::log(g.R * theta / g.A) + g.R * std::log(v);
}
inline double entropy(const GasParams& g, const ThermoState& s) {
  return entropy(g, s.v, s.theta);
}

inline double theta_from_entropy(const GasParams& g, double v, double s) {
  return pressure_from_entropy(g, v, s) * v / g.R;
}

inline double internal_energy(const GasParams& g, double theta) {
  return g.R * theta / (g.gamma - 1.0);
}
inline double total_energy(const GasParams& g, const ThermoState& s) {
  return internal_energy(g, s.theta) + 0.5 * s.u * s.u;
}
inline double theta_from_conservative(const GasParams& g, double v, double u, double E) {
  (void)v;
  return (g.gamma - 1.0) / g.R * (E - 0.5 * u * u);
}

// Characteristic speed sqrt(-p_v) = sqrt(gamma p / v) at fixed entropy.
inline double acoustic_speed(const GasParams& g, double v, double theta) {
  return std::sqrt(g.gamma * pressure(g, v, theta) / v);
}

// lambda_i as a function of (v, s); family is 1 or 3 (2 is the particle path).
inline double lambda_entropy(const GasParams& g, int family, double v, double s) {
  const double c = std::sqrt(g.gamma * pressure_from_entropy(g, v, s) / v);
  return family == 1 ? -c : (family == 3 ? c : 0.0);
}
inline double lambda(const GasParams& g, int family, double v, double theta) {
  const double c = acoustic_speed(g, v, theta);
  return family == 1 ? -c : (family == 3 ? c : 0.0);
}

}  // namespace wavecomp
