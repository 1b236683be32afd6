#include "wavecomp/gas.hpp"

#include <cmath>
#include <string>

namespace wavecomp {

void validate(const GasParams& g) {
  if (!(g.R > 0.0) || !std::isfinite(g.R))
    throw DomainError("gas: R must be positive, got " + std::to_string(g.R));
  if (!(g.gamma > 1.0) || !std::isfinite(g.gamma))
    throw DomainError("gas: gamma must exceed 1, got " + std::to_string(g.gamma));
  if (!(g.A > 0.0) || !std::isfinite(g.A))
    throw DomainError("gas: A must be positive, got " + std::to_string(g.A));
  if (!(g.mu > 0.0) || !std::isfinite(g.mu))
    throw DomainError("gas: mu must be positive, got " + std::to_string(g.mu));
  if (!(g.kappa > 0.0) || !std::isfinite(g.kappa))
    throw DomainError("gas: kappa must be positive, got " + std::to_string(g.kappa));
}

void validate(const ThermoState& s, const char* what) {
  if (!(s.v > 0.0) || !std::isfinite(s.v))
    throw DomainError(std::string(what) + ": specific volume must be positive, got " +
                      std::to_string(s.v));
  if (!std::isfinite(s.u))
    throw DomainError(std::string(what) + ": velocity must be finite");
  if (!(s.theta > 0.0) || !std::isfinite(s.theta))
    throw DomainError(std::string(what) + ": temperature must be positive, got " +
                      std::to_string(s.theta));
}

}  // namespace wavecomp
