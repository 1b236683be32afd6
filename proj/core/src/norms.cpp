#include "wavecomp/norms.hpp"

#include <cmath>
#include <cstddef>

#include "wavecomp/error.hpp"

namespace wavecomp {

double sup_abs(const std::vector<double>& f) {
  double m = 0.0;
  for (double x : f) m = std::max(m, std::abs(x));
  return m;
}

double sup_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DomainError("sup_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

namespace {

double sup_d1_periodic(const std::vector<double>& f, double dx) {
  const int n = static_cast<int>(f.size());
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = (f[(i + 1) % n] - f[(i - 1 + n) % n]) / (2.0 * dx);
    m = std::max(m, std::abs(d));
  }
  return m;
}

double sup_d2_periodic(const std::vector<double>& f, double dx) {
  const int n = static_cast<int>(f.size());
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = (f[(i + 1) % n] - 2.0 * f[i] + f[(i - 1 + n) % n]) / (dx * dx);
    m = std::max(m, std::abs(d));
  }
  return m;
}

}  // namespace

double w1inf_periodic(const std::vector<double>& f, double dx) {
  if (f.size() < 3 || !(dx > 0.0)) throw DomainError("w1inf_periodic: need >=3 samples, dx>0");
  return std::max(sup_abs(f), sup_d1_periodic(f, dx));
}

double w2inf_periodic(const std::vector<double>& f, double dx) {
  if (f.size() < 3 || !(dx > 0.0)) throw DomainError("w2inf_periodic: need >=3 samples, dx>0");
  return std::max({sup_abs(f), sup_d1_periodic(f, dx), sup_d2_periodic(f, dx)});
}

double l2_sq(const std::vector<double>& f, double dx) {
  if (!(dx > 0.0)) throw DomainError("l2_sq: dx>0 required");
  double s = 0.0, comp = 0.0;
  for (double x : f) {
    const double y = x * x - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return dx * s;
}

double h1_sq(const std::vector<double>& f, double dx) {
  if (f.size() < 2) throw DomainError("h1_sq: need >=2 samples");
  std::vector<double> df(f.size() - 1);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) df[i] = (f[i + 1] - f[i]) / dx;
  return l2_sq(f, dx) + l2_sq(df, dx);
}

double norm(const std::vector<double>& f, double dx, NormKind kind) {
  if (f.empty()) throw DomainError("norm: empty field");
  for (double x : f) {
    if (std::isnan(x)) throw DomainError("norm: field contains NaN");
  }
  switch (kind) {
    case NormKind::Linf:
      return sup_abs(f);
    case NormKind::L1: {
      if (!(dx > 0.0)) throw DomainError("norm: dx>0 required");
      double s = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const double w = (i == 0 || i + 1 == f.size()) ? 0.5 : 1.0;
        s += w * std::abs(f[i]);
      }
      return dx * s;
    }
    case NormKind::L2: {
      if (!(dx > 0.0)) throw DomainError("norm: dx>0 required");
      // trapezoidal: subtract the half-weights at the two endpoints
      const double full = l2_sq(f, dx);
      const double ends = 0.5 * dx * (f.front() * f.front() + f.back() * f.back());
      return std::sqrt(std::max(0.0, full - ends));
    }
    case NormKind::H1:
      return std::sqrt(h1_sq(f, dx));
    case NormKind::W2inf:
      return w2inf_periodic(f, dx);
  }
  throw DomainError("norm: unknown kind");
}

}  // namespace wavecomp
