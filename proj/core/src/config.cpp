#include "wavecomp/config.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "wavecomp/error.hpp"
#include "wavecomp/riemann.hpp"
#include "wavecomp/rundir.hpp"

namespace wavecomp {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double to_double(const std::string& key, const std::string& val) {
  std::size_t pos = 0;
  double d = 0.0;
  try {
    d = std::stod(val, &pos);
  } catch (const std::exception&) {
    throw DomainError("config: bad number for " + key + ": '" + val + "'");
  }
  if (pos != val.size()) {
    throw DomainError("config: trailing junk for " + key + ": '" + val + "'");
  }
  return d;
}

int to_int(const std::string& key, const std::string& val) {
  const double d = to_double(key, val);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) {
    throw DomainError("config: integer required for " + key + ": '" + val + "'");
  }
  return i;
}

// "k:amp_cos:amp_sin, k:amp_cos:amp_sin" -> mode list
std::vector<ModeSpec> parse_modes(const std::string& key, const std::string& val) {
  std::vector<ModeSpec> out;
  std::stringstream ss(val);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::stringstream ts(item);
    std::string a, b, c;
    if (!std::getline(ts, a, ':') || !std::getline(ts, b, ':') ||
        !std::getline(ts, c)) {
      throw DomainError("config: " + key + " entries need k:amp_cos:amp_sin, got '" +
                        item + "'");
    }
    ModeSpec m;
    m.k = to_int(key, trim(a));
    m.amp_cos = to_double(key, trim(b));
    m.amp_sin = to_double(key, trim(c));
    if (m.k < 1) throw DomainError("config: " + key + " wavenumbers must be >= 1");
    out.push_back(m);
  }
  if (out.empty()) throw DomainError("config: " + key + " lists no modes");
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config: line " + std::to_string(lineno) +
                        " is not key=value: '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) {
      throw DomainError("config: empty key or value at line " +
                        std::to_string(lineno));
    }
    if (!kv.emplace(key, val).second) {
      throw DomainError("config: duplicate key " + key);
    }
  }

  bool right_state = false, right_delta = false;
  for (const auto& [key, val] : kv) {
    if (key == "gas.R") c.gas.R = to_double(key, val);
    else if (key == "gas.gamma") c.gas.gamma = to_double(key, val);
    else if (key == "gas.A") c.gas.A = to_double(key, val);
    else if (key == "gas.mu") c.gas.mu = to_double(key, val);
    else if (key == "gas.kappa") c.gas.kappa = to_double(key, val);
    else if (key == "left.v") c.left.v = to_double(key, val);
    else if (key == "left.u") c.left.u = to_double(key, val);
    else if (key == "left.theta") c.left.theta = to_double(key, val);
    else if (key == "right.v") { c.right.v = to_double(key, val); right_state = true; }
    else if (key == "right.u") { c.right.u = to_double(key, val); right_state = true; }
    else if (key == "right.theta") { c.right.theta = to_double(key, val); right_state = true; }
    else if (key == "right.delta") { c.delta = to_double(key, val); right_delta = true; }
    else if (key == "right.a_r") { c.a_r = to_double(key, val); right_delta = true; }
    else if (key == "pert.eps1") c.eps1 = to_double(key, val);
    else if (key == "pert.modes.1") { c.modes[0] = parse_modes(key, val); c.has_modes = true; }
    else if (key == "pert.modes.2") { c.modes[1] = parse_modes(key, val); c.has_modes = true; }
    else if (key == "pert.modes.3") { c.modes[2] = parse_modes(key, val); c.has_modes = true; }
    else if (key == "grid.xmin") c.x_min = to_double(key, val);
    else if (key == "grid.xmax") c.x_max = to_double(key, val);
    else if (key == "grid.ncells") c.ncells = to_int(key, val);
    else if (key == "grid.torus_cells") c.torus_cells = to_int(key, val);
    else if (key == "time.T") c.T = to_double(key, val);
    else if (key == "time.cfl") c.cfl = to_double(key, val);
    else if (key == "time.scheme") {
      if (val != "strang" && val != "explicit") {
        throw DomainError("config: time.scheme must be strang or explicit");
      }
      c.scheme = val;
    } else if (key == "weights.sigma") c.sigma = to_double(key, val);
    else if (key == "output.dir") c.out_dir = val;
    else throw DomainError("config: unknown key " + key);
  }

  if (right_state && right_delta) {
    throw DomainError("config: give either right.{v,u,theta} or right.delta, not both");
  }
  c.has_right = right_state;

  validate(c.gas);
  validate(c.left, "left state");
  if (c.has_right) validate(c.right, "right state");
  if (!(c.x_max > c.x_min)) throw DomainError("config: grid.xmax must exceed grid.xmin");
  if (c.ncells < 4) throw DomainError("config: grid.ncells must be >= 4");
  if (c.torus_cells < 4) throw DomainError("config: grid.torus_cells must be >= 4");
  if (!(c.T > 0.0)) throw DomainError("config: time.T must be positive");
  if (!(c.cfl > 0.0 && c.cfl <= 1.0)) throw DomainError("config: time.cfl in (0,1]");
  if (!(c.sigma > 0.0)) throw DomainError("config: weights.sigma must be positive");
  if (!(c.eps1 >= 0.0)) throw DomainError("config: pert.eps1 must be >= 0");
  return c;
}

RunConfig load_config(const std::string& path) {
  return parse_config(read_text(path));
}

PeriodicPerturbation config_perturbation(const RunConfig& c) {
  if (c.has_modes) {
    PeriodicPerturbation p;
    p.modes = c.modes;
    p.validate();
    return p;
  }
  if (c.eps1 == 0.0) return PeriodicPerturbation{};
  return default_perturbation(c.eps1);
}

ThermoState config_right_state(const RunConfig& c) {
  if (c.has_right) return c.right;
  return right_state_for_delta(c.gas, c.left, c.delta, c.a_r);
}

}  // namespace wavecomp
