#include "wavecomp/csvio.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wavecomp/error.hpp"
#include "wavecomp/rundir.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

namespace wavecomp {

namespace {

constexpr char kMagic[16] = "wavecomp-snap\0\0";  // 13 chars + 3 NUL
constexpr std::uint32_t kVersion = 1;

void atomic_rename(const std::string& tmp, const std::string& path) {
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("rename failed: " + path);
  }
}

template <class T>
void put(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
void get(std::istream& in, T& v, const std::string& path) {
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw IoError("truncated snapshot: " + path);
}

}  // namespace

void write_csv(const std::string& path, const CsvTable& table) {
  if (table.header.empty()) throw DomainError("csv: header is mandatory");
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw DomainError("csv: row width does not match header");
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out << ',';
    out << table.header[i];
  }
  out << '\n';
  char buf[40];
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
      if (i) out << ',';
      out << buf;
    }
    out << '\n';
  }
  atomic_write_text(path, out.str());
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw DomainError("csv: empty file: " + path);
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  if (table.header.empty()) throw DomainError("csv: header is mandatory: " + path);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw DomainError("csv: bad numeric cell '" + cell + "' in " + path);
      }
    }
    if (row.size() != table.header.size()) {
      throw DomainError("csv: ragged row in " + path);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_snapshot(const std::string& path, const Snapshot& snap) {
  if (snap.names.size() != snap.fields.size()) {
    throw DomainError("snapshot: names/fields size mismatch");
  }
  if (snap.fields.empty()) throw DomainError("snapshot: no fields");
  const std::size_t n = snap.fields[0].size();
  for (const auto& f : snap.fields) {
    if (f.size() != n) throw DomainError("snapshot: unequal field lengths");
  }
  if (n == 0) throw DomainError("snapshot: empty fields");
  if (!(snap.dx > 0.0)) throw DomainError("snapshot: dx must be positive");

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp);
    out.write(kMagic, sizeof(kMagic));
    put(out, kVersion);
    put(out, static_cast<std::uint32_t>(snap.fields.size()));
    put(out, static_cast<std::uint64_t>(n));
    put(out, snap.x0);
    put(out, snap.dx);
    put(out, snap.time);
    for (std::size_t f = 0; f < snap.fields.size(); ++f) {
      put(out, static_cast<std::uint32_t>(snap.names[f].size()));
      out.write(snap.names[f].data(),
                static_cast<std::streamsize>(snap.names[f].size()));
      out.write(reinterpret_cast<const char*>(snap.fields[f].data()),
                static_cast<std::streamsize>(n * sizeof(double)));
    }
    out.flush();
    if (!out) throw IoError("write failed: " + tmp);
  }
  atomic_rename(tmp, path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  char magic[16];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw IoError("not a snapshot file: " + path);
  }
  std::uint32_t version = 0, nfields = 0;
  std::uint64_t n = 0;
  get(in, version, path);
  if (version != kVersion) {
    throw IoError("unsupported snapshot version in " + path);
  }
  get(in, nfields, path);
  get(in, n, path);
  Snapshot snap;
  get(in, snap.x0, path);
  get(in, snap.dx, path);
  get(in, snap.time, path);
  if (nfields == 0 || n == 0 || nfields > 64 || n > (1ull << 32)) {
    throw IoError("implausible snapshot header in " + path);
  }
  for (std::uint32_t f = 0; f < nfields; ++f) {
    std::uint32_t len = 0;
    get(in, len, path);
    if (len > 256) throw IoError("implausible field name in " + path);
    std::string name(len, '\0');
    in.read(name.data(), len);
    if (!in) throw IoError("truncated snapshot: " + path);
    std::vector<double> vals(n);
    in.read(reinterpret_cast<char*>(vals.data()),
            static_cast<std::streamsize>(n * sizeof(double)));
    if (!in) throw IoError("truncated snapshot: " + path);
    snap.names.push_back(std::move(name));
    snap.fields.push_back(std::move(vals));
  }
  return snap;
}

}  // namespace wavecomp
