// Acceptance gate: one pass/fail line per criterion.  Each criterion pins its
// own tolerances and wall-clock budget; the process exit code is the number of
// failed criteria.  Optional argv: criterion numbers to run (default all).
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wavecomp/gas.hpp"
#include "wavecomp/quad.hpp"
#include "wavecomp/riemann.hpp"

namespace {

using wavecomp::GasParams;
using wavecomp::ThermoState;
using wavecomp::WavePattern;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, ...) {
  va_list ap;
  va_start(ap, f);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// ---------------------------------------------------------------------------
// Criterion 1: wave-pattern solver vs. closed-form bisection oracle.

double curve_integral_closed(double gamma, double K, int family, double va,
                             double vb) {
  const double e = 0.5 * (gamma - 1.0);
  const double base = std::sqrt(gamma * K) * (2.0 / (gamma - 1.0)) *
                      (std::pow(va, -e) - std::pow(vb, -e));
  return family == 1 ? -base : base;
}

Outcome criterion1() {
  GasParams g;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dv(0.5, 2.0), dth(0.5, 2.0),
      du(-0.3, 0.3), dd(-0.2, 0.2), dar(1.0, 3.0);
  double worst = 0.0;
  const int n = 50;
  for (int i = 0; i < n; ++i) {
    ThermoState left{dv(rng), du(rng), dth(rng)};
    double delta = dd(rng);
    const ThermoState right = wavecomp::right_state_for_delta(g, left, delta, dar(rng));
    const WavePattern w = wavecomp::solve_pattern(g, left, right);

    // Oracle: bisection on the closed-form velocity match.
    const double KL = wavecomp::pressure(g, left) * std::pow(left.v, g.gamma);
    const double KR = wavecomp::pressure(g, right) * std::pow(right.v, g.gamma);
    auto f = [&](double p) {
      const double vL = std::pow(KL / p, 1.0 / g.gamma);
      const double vR = std::pow(KR / p, 1.0 / g.gamma);
      return (left.u - curve_integral_closed(g.gamma, KL, 1, left.v, vL)) -
             (right.u - curve_integral_closed(g.gamma, KR, 3, right.v, vR));
    };
    double lo = std::min(wavecomp::pressure(g, left), wavecomp::pressure(g, right)) *
                1e-12;
    double hi = std::max(wavecomp::pressure(g, left), wavecomp::pressure(g, right)) *
                2.0;
    for (int it = 0; it < 400; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) >= 0.0 ? lo : hi) = mid;
    }
    const double oracle_ps = 0.5 * (lo + hi);
    const double rel = std::abs(w.p_star - oracle_ps) / oracle_ps;
    worst = std::max(worst, rel);

    // Middle-state consistency checks against the oracle pressure.
    const double v_ml = std::pow(KL / oracle_ps, 1.0 / g.gamma);
    const double v_mr = std::pow(KR / oracle_ps, 1.0 / g.gamma);
    worst = std::max(worst, std::abs(w.mid_left.v - v_ml) / v_ml);
    worst = std::max(worst, std::abs(w.mid_right.v - v_mr) / v_mr);

    // Fan-opening invariant.
    if (!(w.lam1_head <= w.lam1_tail + 1e-14 && w.lam1_tail <= 1e-14 &&
          -1e-14 <= w.lam3_tail && w.lam3_tail <= w.lam3_head + 1e-14))
      return {false, "fan ordering violated on case " + std::to_string(i)};
  }
  const bool ok = worst < 1e-9;
  return {ok, fmt("%d random patterns, max rel err %.2e (tol 1e-9)", n, worst)};
}

// ---------------------------------------------------------------------------

std::vector<Criterion> make_criteria() {
  return {
      {1, "pattern-solver-vs-oracle", 10.0, criterion1},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : make_criteria()) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= c.budget_s;
    const bool pass = out.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[PRIMARY %d] %s %s: %s (%.1fs%s budget %.0fs)\n", c.id,
                pass ? "PASS" : "FAIL", c.name, out.detail.c_str(), secs,
                in_budget ? "," : ", OVER", c.budget_s);
    std::fflush(stdout);
  }
  return failures;
}
