// Least-squares fits for decay-rate extraction from norm histories.
#pragma once

#include <vector>

namespace wavecomp {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int n = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct DecayFit {
  double rate = 0.0;       // y ~ prefactor * exp(-rate t), or * (1+t)^(-rate)
  double prefactor = 0.0;
  double r2 = 0.0;
  int points = 0;          // samples actually used
  bool underflow = false;  // window truncated/emptied by the noise floor
};

// Fit log y against t over the samples preceding the first drop below
// floor_abs; samples past that point are discarded (round-off noise).
// Fewer than 3 usable points flags underflow with a zero fit.
DecayFit fit_exponential(const std::vector<double>& t, const std::vector<double>& y,
                         double floor_abs);

// Same truncation policy, fitting log y against log(1+t).
DecayFit fit_power(const std::vector<double>& t, const std::vector<double>& y,
                   double floor_abs);

// Strict signed-exponent fit: y ~ prefactor * exp(exponent * t) for the
// exponential model, y ~ prefactor * (1+t)^exponent for the power model.
// Requires >= 10 samples, all positive; throws DomainError otherwise.
enum class DecayModel { exponential, power };

struct DecayLaw {
  double exponent = 0.0;
  double prefactor = 0.0;
  double r2 = 0.0;
};

DecayLaw fit_decay(const std::vector<double>& t, const std::vector<double>& y,
                   DecayModel model);

}  // namespace wavecomp
