#include "wavecomp/report.hpp"

#include <cmath>

#include "json.hpp"
#include "wavecomp/error.hpp"
#include "wavecomp/rundir.hpp"

using nlohmann::json;

namespace wavecomp {

bool RunReport::all_pass() const {
  for (const auto& [name, v] : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

void RunReport::validate() const {
  for (const auto& [name, v] : verdicts) {
    if (!series.count(v.series)) {
      throw DomainError("report: verdict '" + name +
                        "' references unknown series '" + v.series + "'");
    }
    if (!std::isfinite(v.threshold)) {
      throw DomainError("report: verdict '" + name + "' has no finite threshold");
    }
  }
}

void write_report(const std::string& path, const RunReport& rep) {
  rep.validate();
  json j;
  j["series"] = json::object();
  for (const auto& [name, pts] : rep.series) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({p.t, p.value});
    j["series"][name] = std::move(arr);
  }
  j["fits"] = json::object();
  for (const auto& [name, f] : rep.fits) {
    j["fits"][name] = {{"exponent", f.exponent},
                       {"prefactor", f.prefactor},
                       {"r2", f.r2}};
  }
  j["verdicts"] = json::object();
  for (const auto& [name, v] : rep.verdicts) {
    j["verdicts"][name] = {{"pass", v.pass},
                           {"series", v.series},
                           {"threshold", v.threshold},
                           {"note", v.note}};
  }
  j["provenance"] = rep.provenance;
  atomic_write_text(path, j.dump(2) + "\n");
}

RunReport read_report(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw IoError("report: cannot parse " + path + ": " + e.what());
  }
  RunReport rep;
  try {
    for (const auto& [name, arr] : j.at("series").items()) {
      std::vector<SeriesPoint> pts;
      for (const auto& p : arr) {
        pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      }
      rep.series[name] = std::move(pts);
    }
    for (const auto& [name, f] : j.at("fits").items()) {
      rep.fits[name] = {f.at("exponent").get<double>(),
                        f.at("prefactor").get<double>(), f.at("r2").get<double>()};
    }
    for (const auto& [name, v] : j.at("verdicts").items()) {
      rep.verdicts[name] = {v.at("pass").get<bool>(),
                            v.at("series").get<std::string>(),
                            v.at("threshold").get<double>(),
                            v.at("note").get<std::string>()};
    }
    for (const auto& [k, v] : j.at("provenance").items()) {
      rep.provenance[k] = v.get<std::string>();
    }
  } catch (const json::exception& e) {
    throw IoError("report: malformed fields in " + path + ": " + e.what());
  }
  rep.validate();
  return rep;
}

}  // namespace wavecomp
