// CSV tables (mandatory headers, 17-significant-digit scientific notation)
// and binary field snapshots.  All writes are atomic: a sibling temp file is
// renamed over the target.
//
// Snapshot layout, little-endian:
//   bytes 0..15   magic "wavecomp-snap\0\0\0"
//   u32           format version (1)
//   u32           field count
//   u64           cell count n
//   f64           x0 (first cell center), dx, time
//   per field:    u32 name length, name bytes, then n f64 values
#pragma once

#include <string>
#include <vector>

namespace wavecomp {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;  // each row matches header size
};

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);  // IoError / DomainError

struct Snapshot {
  double x0 = 0.0;
  double dx = 0.0;
  double time = 0.0;
  std::vector<std::string> names;
  std::vector<std::vector<double>> fields;  // names.size() rows, equal lengths
};

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

}  // namespace wavecomp
