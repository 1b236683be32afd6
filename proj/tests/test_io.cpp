#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "wavecomp/config.hpp"
#include "wavecomp/csvio.hpp"
#include "wavecomp/error.hpp"
#include "wavecomp/report.hpp"
#include "wavecomp/riemann.hpp"
#include "wavecomp/rundir.hpp"

using namespace wavecomp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  std::string path;
  TempDir() {
    path = (fs::temp_directory_path() /
            ("wavecomp_io_" + std::to_string(::getpid())))
               .string();
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return path + "/" + name; }
};

}  // namespace

TEST_CASE("config round trip: defaults, overrides, and the mode lists") {
  const RunConfig d = parse_config("");
  CHECK(d.gas.gamma == doctest::Approx(5.0 / 3.0));
  CHECK(d.left.v == 1.0);
  CHECK(d.has_right == false);
  CHECK(d.delta == 0.0);
  CHECK(d.ncells == 8192);
  CHECK(d.scheme == "strang");
  CHECK(d.sigma == 0.1);
  CHECK(config_perturbation(d).zero());
  // delta = 0 manufactures the constant pattern
  const ThermoState r0 = config_right_state(d);
  CHECK(r0.v == doctest::Approx(d.left.v).epsilon(1e-12));

  const std::string text = R"(
# sample run
gas.mu = 0.5
gas.kappa = 2
left.theta = 1.25
right.delta = 0.1   # manufactured pattern
right.a_r = 1.5
pert.eps1 = 0.01
grid.xmin = -100
grid.xmax = 100
grid.ncells = 2048
grid.torus_cells = 256
time.T = 20
time.cfl = 0.3
time.scheme = explicit
weights.sigma = 0.05
output.dir = out/sample
)";
  const RunConfig c = parse_config(text);
  CHECK(c.gas.mu == 0.5);
  CHECK(c.gas.kappa == 2.0);
  CHECK(c.left.theta == 1.25);
  CHECK(c.has_right == false);
  CHECK(c.delta == 0.1);
  CHECK(c.a_r == 1.5);
  CHECK(c.eps1 == 0.01);
  CHECK(c.x_min == -100.0);
  CHECK(c.ncells == 2048);
  CHECK(c.torus_cells == 256);
  CHECK(c.T == 20.0);
  CHECK(c.scheme == "explicit");
  CHECK(c.sigma == 0.05);
  CHECK(c.out_dir == "out/sample");
  const PeriodicPerturbation p = config_perturbation(c);
  CHECK(p.h3_norm() == doctest::Approx(0.01).epsilon(1e-12));
  const ThermoState r = config_right_state(c);
  CHECK(r.theta == doctest::Approx(1.35).epsilon(1e-10));

  // explicit modes override the default shape
  const RunConfig m = parse_config(
      "pert.modes.1 = 1:0.2:0.0\n"
      "pert.modes.2 = 1:0.0:0.1, 2:0.05:0.0\n"
      "pert.modes.3 = 3:0.0:0.02\n");
  const PeriodicPerturbation pm = config_perturbation(m);
  CHECK_FALSE(pm.zero());
  CHECK(pm.modes[1].size() == 2);
  CHECK(pm.modes[1][1].k == 2);
  CHECK(pm.modes[2][0].amp_sin == 0.02);

  // explicit right state
  const RunConfig er = parse_config("right.v = 1.2\nright.u = 0.1\nright.theta = 0.9\n");
  CHECK(er.has_right);
  CHECK(config_right_state(er).v == 1.2);

  CHECK_THROWS_AS(parse_config("nonsense.key = 1\n"), DomainError);
  CHECK_THROWS_AS(parse_config("gas.mu 0.5\n"), DomainError);
  CHECK_THROWS_AS(parse_config("gas.mu = abc\n"), DomainError);
  CHECK_THROWS_AS(parse_config("gas.mu = 1\ngas.mu = 2\n"), DomainError);
  CHECK_THROWS_AS(parse_config("grid.ncells = 12.5\n"), DomainError);
  CHECK_THROWS_AS(parse_config("right.v = 1.1\nright.delta = 0.1\n"), DomainError);
  CHECK_THROWS_AS(parse_config("time.scheme = leapfrog\n"), DomainError);
  CHECK_THROWS_AS(parse_config("time.cfl = 0\n"), DomainError);
  CHECK_THROWS_AS(parse_config("pert.modes.1 = 0:1:0\n"), DomainError);
  CHECK_THROWS_AS(parse_config("pert.modes.1 = 1:2\n"), DomainError);
  CHECK_THROWS_AS(load_config("/no/such/file.cfg"), IoError);
}

TEST_CASE("csv writes full precision and reads back bit-identically") {
  TempDir tmp;
  const std::string path = tmp.file("table.csv");
  CsvTable t;
  t.header = {"t", "value", "other"};
  t.rows = {{0.0, 1.0 / 3.0, -2.5e-17},
            {0.125, M_PI, 6.02214076e23},
            {0.25, -1.0 / 7.0, 1e-300}};
  write_csv(path, t);
  const CsvTable r = read_csv(path);
  REQUIRE(r.header == t.header);
  REQUIRE(r.rows.size() == t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.header.size(); ++j) {
      CHECK(r.rows[i][j] == t.rows[i][j]);  // exact: 17 significant digits
    }
  }
  // no stray temp file left behind
  CHECK_FALSE(fs::exists(path + ".tmp"));

  CsvTable bad;
  CHECK_THROWS_AS(write_csv(tmp.file("bad.csv"), bad), DomainError);
  bad.header = {"a"};
  bad.rows = {{1.0, 2.0}};
  CHECK_THROWS_AS(write_csv(tmp.file("bad.csv"), bad), DomainError);
  CHECK_THROWS_AS(read_csv(tmp.file("missing.csv")), IoError);
  atomic_write_text(tmp.file("ragged.csv"), "a,b\n1.0\n");
  CHECK_THROWS_AS(read_csv(tmp.file("ragged.csv")), DomainError);
  atomic_write_text(tmp.file("junk.csv"), "a,b\n1.0,zzz\n");
  CHECK_THROWS_AS(read_csv(tmp.file("junk.csv")), DomainError);
}

TEST_CASE("snapshot format survives a round trip and rejects corruption") {
  TempDir tmp;
  const std::string path = tmp.file("state.snap");
  Snapshot s;
  s.x0 = -2.0;
  s.dx = 0.25;
  s.time = 1.5;
  s.names = {"v", "u", "theta"};
  s.fields.assign(3, std::vector<double>(17));
  for (int f = 0; f < 3; ++f) {
    for (int i = 0; i < 17; ++i) {
      s.fields[f][i] = std::sin(0.3 * i + f) * std::pow(10.0, f - 150);
    }
  }
  write_snapshot(path, s);
  const Snapshot r = read_snapshot(path);
  CHECK(r.x0 == s.x0);
  CHECK(r.dx == s.dx);
  CHECK(r.time == s.time);
  REQUIRE(r.names == s.names);
  for (int f = 0; f < 3; ++f) {
    for (int i = 0; i < 17; ++i) CHECK(r.fields[f][i] == s.fields[f][i]);
  }

  CHECK_THROWS_AS(read_snapshot(tmp.file("missing.snap")), IoError);
  atomic_write_text(tmp.file("short.snap"), "wavecomp-snap");
  CHECK_THROWS_AS(read_snapshot(tmp.file("short.snap")), IoError);
  atomic_write_text(tmp.file("other.snap"), std::string(64, 'x'));
  CHECK_THROWS_AS(read_snapshot(tmp.file("other.snap")), IoError);
  // truncate the valid file mid-payload
  const std::string whole = read_text(path);
  atomic_write_text(tmp.file("cut.snap"), whole.substr(0, whole.size() / 2));
  CHECK_THROWS_AS(read_snapshot(tmp.file("cut.snap")), IoError);

  Snapshot bad = s;
  bad.names.pop_back();
  CHECK_THROWS_AS(write_snapshot(tmp.file("bad.snap"), bad), DomainError);
  bad = s;
  bad.fields[1].resize(5);
  CHECK_THROWS_AS(write_snapshot(tmp.file("bad.snap"), bad), DomainError);
}

TEST_CASE("report validation ties verdicts to series and round trips") {
  TempDir tmp;
  RunReport rep;
  rep.series["decay_w2inf"] = {{0.0, 1e-2}, {1.0, 5e-3}, {2.0, 2.4e-3}};
  rep.series["drift_mass"] = {{0.0, 0.0}, {2.0, 3e-14}};
  rep.fits["decay_w2inf"] = {-0.72, 1.1e-2, 0.997};
  rep.verdicts["decays"] = {true, "decay_w2inf", 0.98, "fit r2 above threshold"};
  rep.verdicts["conserves"] = {true, "drift_mass", 1e-11, "max |drift|"};
  rep.provenance["config"] = fnv1a_hex("gas.mu = 1\n");
  rep.provenance["grid"] = "n=512 dx=1.95e-3";
  rep.provenance["version"] = version_string();
  CHECK(rep.all_pass());

  const std::string path = tmp.file("report.json");
  write_report(path, rep);
  const RunReport r = read_report(path);
  CHECK(r.series.size() == 2);
  CHECK(r.series.at("decay_w2inf")[2].value == 2.4e-3);
  CHECK(r.fits.at("decay_w2inf").exponent == -0.72);
  CHECK(r.verdicts.at("decays").pass);
  CHECK(r.verdicts.at("conserves").threshold == 1e-11);
  CHECK(r.provenance.at("version") == version_string());
  CHECK(r.all_pass());

  RunReport dangling = rep;
  dangling.verdicts["orphan"] = {true, "no_such_series", 1.0, ""};
  CHECK_THROWS_AS(write_report(tmp.file("x.json"), dangling), DomainError);
  CHECK_THROWS_AS(dangling.validate(), DomainError);
  RunReport failing = rep;
  failing.verdicts["decays"].pass = false;
  CHECK_FALSE(failing.all_pass());
  CHECK_THROWS_AS(read_report(tmp.file("missing.json")), IoError);
  atomic_write_text(tmp.file("junk.json"), "{not json");
  CHECK_THROWS_AS(read_report(tmp.file("junk.json")), IoError);
}

TEST_CASE("directory plumbing: creation, hashing, atomic text") {
  TempDir tmp;
  const std::string sub = tmp.file("a/b/c");
  const std::string abs = ensure_dir(sub);
  CHECK(fs::is_directory(abs));
  CHECK(fs::path(abs).is_absolute());
  ensure_dir(sub);  // idempotent

  atomic_write_text(tmp.file("t.txt"), "hello\n");
  CHECK(read_text(tmp.file("t.txt")) == "hello\n");
  atomic_write_text(tmp.file("t.txt"), "replaced\n");
  CHECK(read_text(tmp.file("t.txt")) == "replaced\n");

  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
  CHECK(fnv1a_hex("config") == fnv1a_hex("config"));
  CHECK(fnv1a_hex("x").size() == 16);

  atomic_write_text(tmp.file("plain.txt"), "not a dir");
  CHECK_THROWS_AS(ensure_dir(tmp.file("plain.txt")), IoError);
  CHECK_THROWS_AS(read_text(tmp.file("absent.txt")), IoError);
}
