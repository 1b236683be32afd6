// Error types thrown by the wavecomp library.
#pragma once

#include <stdexcept>
#include <string>

namespace wavecomp {

// Invalid physical input (nonpositive v/theta, bad parameters, bad config).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// End states not connectable by the requested wave pattern.
struct PatternError : std::runtime_error {
  explicit PatternError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iteration failed to converge, or a tolerance could not be met.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// A time integration produced NaN or left the admissible state set.
struct BlowupError : std::runtime_error {
  explicit BlowupError(const std::string& msg) : std::runtime_error(msg) {}
};

// Grid or sampling too coarse for the requested diagnostic.
struct ResolutionError : std::runtime_error {
  explicit ResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem and serialization failures.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wavecomp
