// Structured run reports: named time series, fitted decay laws, boolean
// verdicts with thresholds, and provenance.  Serialized as JSON; every
// verdict must reference a series present in the same report.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace wavecomp {

struct SeriesPoint {
  double t = 0.0;
  double value = 0.0;
};

struct FitRecord {
  double exponent = 0.0;
  double prefactor = 0.0;
  double r2 = 0.0;
};

struct Verdict {
  bool pass = false;
  std::string series;     // name of the series the verdict judges
  double threshold = 0.0;
  std::string note;       // what was compared against the threshold
};

struct RunReport {
  std::map<std::string, std::vector<SeriesPoint>> series;
  std::map<std::string, FitRecord> fits;
  std::map<std::string, Verdict> verdicts;
  std::map<std::string, std::string> provenance;  // config hash, grid, version

  bool all_pass() const;
  // every verdict must name an existing series and carry a finite threshold
  void validate() const;
};

void write_report(const std::string& path, const RunReport& rep);  // atomic
RunReport read_report(const std::string& path);

}  // namespace wavecomp
