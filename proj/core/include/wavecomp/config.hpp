// Flat key=value run configuration.
//
// Recognized keys (defaults in parentheses):
//   gas.R (1), gas.gamma (5/3), gas.A (1), gas.mu (1), gas.kappa (1)
//   left.v (1), left.u (0), left.theta (1)
//   right.v / right.u / right.theta       -- explicit right state, or
//   right.delta, right.a_r (2)            -- manufactured two-fan pattern
//   pert.eps1 (0)                         -- default perturbation amplitude
//   pert.modes.1 / .2 / .3                -- "k:amp_cos:amp_sin, k:..." lists
//   grid.xmin (-250), grid.xmax (250), grid.ncells (8192)
//   grid.torus_cells (512)
//   time.T (40), time.cfl (0.4), time.scheme (strang | explicit)
//   weights.sigma (0.1)
//   output.dir (runs)
// '#' starts a comment; blank lines are skipped; unknown keys are rejected.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "wavecomp/gas.hpp"
#include "wavecomp/pert.hpp"

namespace wavecomp {

struct RunConfig {
  GasParams gas;
  ThermoState left{1.0, 0.0, 1.0};

  bool has_right = false;  // explicit right state vs delta-spec
  ThermoState right{1.0, 0.0, 1.0};
  double delta = 0.0;
  double a_r = 2.0;

  double eps1 = 0.0;
  bool has_modes = false;  // explicit mode lists override eps1 scaling
  std::array<std::vector<ModeSpec>, 3> modes;

  double x_min = -250.0, x_max = 250.0;
  int ncells = 8192;
  int torus_cells = 512;

  double T = 40.0;
  double cfl = 0.4;
  std::string scheme = "strang";

  double sigma = 0.1;
  std::string out_dir = "runs";
};

// Parse configuration text / file.  DomainError on syntax errors, unknown
// keys, or out-of-range values; IoError if the file cannot be read.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// The perturbation the config describes: explicit mode lists if given,
// otherwise the default three-component shape scaled to eps1 (zero if
// eps1 == 0).
PeriodicPerturbation config_perturbation(const RunConfig& c);

// The right state: explicit, or manufactured from (delta, a_r).
ThermoState config_right_state(const RunConfig& c);

}  // namespace wavecomp
