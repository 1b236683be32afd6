#include "wavecomp/heatkernel.hpp"

#include <cmath>
#include <cstdio>

#include "wavecomp/error.hpp"

namespace wavecomp {

HeatKernelWeight::HeatKernelWeight(double sigma) : sigma_(sigma) {
  if (!(sigma > 0.0)) {
    throw DomainError("heat-kernel width must be positive");
  }
}

double HeatKernelWeight::w(double x, double t) const {
  const double s = 1.0 + t;
  return std::exp(-sigma_ * x * x / s) / std::sqrt(s);
}

double HeatKernelWeight::w_x(double x, double t) const {
  const double s = 1.0 + t;
  return -2.0 * sigma_ * x / s * w(x, t);
}

double HeatKernelWeight::w_xx(double x, double t) const {
  const double s = 1.0 + t;
  const double q = 2.0 * sigma_ / s;
  return (q * q * x * x - q) * w(x, t);
}

double HeatKernelWeight::w_t(double x, double t) const {
  // equals w_xx / (4 sigma) identically
  const double s = 1.0 + t;
  return (sigma_ * x * x / (s * s) - 0.5 / s) * w(x, t);
}

double HeatKernelWeight::g(double x, double t) const {
  const double s = 1.0 + t;
  return 0.5 * std::sqrt(M_PI / sigma_) *
         (1.0 + std::erf(x * std::sqrt(sigma_ / s)));
}

double HeatKernelWeight::g_t(double x, double t) const {
  // equals w_x / (4 sigma) identically
  const double s = 1.0 + t;
  return -0.5 * x / s * w(x, t);
}

double HeatKernelWeight::g_sup() const { return std::sqrt(M_PI / sigma_); }

DualityReport weighted_square_integral(
    const HeatKernelWeight& hk, const std::vector<double>& t,
    const std::vector<double>& x, const std::vector<std::vector<double>>& h,
    bool check_resolution) {
  const std::size_t nt = t.size();
  const std::size_t nx = x.size();
  if (nt < 2 || h.size() != nt) {
    throw DomainError("weighted square integral needs >= 2 matching snapshots");
  }
  if (nx < 3) throw DomainError("weighted square integral needs >= 3 grid nodes");
  for (std::size_t k = 0; k < nt; ++k) {
    if (h[k].size() != nx) {
      throw DomainError("snapshot size does not match the spatial grid");
    }
    if (k > 0 && !(t[k] > t[k - 1])) {
      throw DomainError("snapshot times must be strictly increasing");
    }
  }
  const double dx = x[1] - x[0];
  for (std::size_t i = 1; i + 1 < nx; ++i) {
    if (std::abs(x[i + 1] - x[i] - dx) > 1e-9 * std::abs(dx)) {
      throw DomainError("spatial grid must be uniform");
    }
  }

  // trapezoid in x with endpoint half-weights
  auto xtrapz = [&](auto&& f) {
    double sum = 0.5 * (f(0) + f(nx - 1));
    for (std::size_t i = 1; i + 1 < nx; ++i) sum += f(i);
    return sum * dx;
  };

  std::vector<double> wsq(nt), hxsq(nt), dual(nt);
  for (std::size_t k = 0; k < nt; ++k) {
    const auto& hk_row = h[k];
    wsq[k] = xtrapz([&](std::size_t i) {
      const double wi = hk.w(x[i], t[k]);
      return hk_row[i] * hk_row[i] * wi * wi;
    });
    auto hx = [&](std::size_t i) -> double {
      if (i == 0) return (-3.0 * hk_row[0] + 4.0 * hk_row[1] - hk_row[2]) / (2.0 * dx);
      if (i + 1 == nx)
        return (3.0 * hk_row[nx - 1] - 4.0 * hk_row[nx - 2] + hk_row[nx - 3]) /
               (2.0 * dx);
      return (hk_row[i + 1] - hk_row[i - 1]) / (2.0 * dx);
    };
    hxsq[k] = xtrapz([&](std::size_t i) {
      const double d = hx(i);
      return d * d;
    });
    const std::size_t klo = (k == 0) ? 0 : k - 1;
    const std::size_t khi = (k + 1 == nt) ? k : k + 1;
    const double idt = 1.0 / (t[khi] - t[klo]);
    const auto& hlo = h[klo];
    const auto& hhi = h[khi];
    dual[k] = xtrapz([&](std::size_t i) {
      const double ht = (hhi[i] - hlo[i]) * idt;
      const double gi = hk.g(x[i], t[k]);
      return ht * hk_row[i] * gi * gi;
    });
  }

  auto ttrapz = [&](const std::vector<double>& f) {
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < nt; ++k) {
      sum += 0.5 * (f[k] + f[k + 1]) * (t[k + 1] - t[k]);
    }
    return sum;
  };

  DualityReport rep;
  rep.lhs = ttrapz(wsq);
  rep.term_h0 = 4.0 * M_PI * xtrapz([&](std::size_t i) { return h[0][i] * h[0][i]; });
  rep.term_hx = 4.0 * M_PI / hk.sigma() * ttrapz(hxsq);
  rep.term_dual = 8.0 * hk.sigma() * ttrapz(dual);
  rep.rhs = rep.term_h0 + rep.term_hx + rep.term_dual;
  rep.slack = rep.rhs - rep.lhs;

  if (check_resolution && nt >= 5) {
    std::vector<double> ct;
    std::vector<std::vector<double>> ch;
    for (std::size_t k = 0; k < nt; k += 2) {
      ct.push_back(t[k]);
      ch.push_back(h[k]);
    }
    if (ct.back() != t.back()) {  // keep the full window
      ct.push_back(t.back());
      ch.push_back(h.back());
    }
    const DualityReport coarse = weighted_square_integral(hk, ct, x, ch, false);
    const double scale =
        std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-30});
    if (std::abs(rep.lhs - coarse.lhs) > 0.10 * scale ||
        std::abs(rep.rhs - coarse.rhs) > 0.10 * scale) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "weighted square integral not time-resolved: halving the "
                    "snapshot rate moves lhs %.3g -> %.3g, rhs %.3g -> %.3g",
                    rep.lhs, coarse.lhs, rep.rhs, coarse.rhs);
      throw ResolutionError(buf);
    }
  }
  return rep;
}

}  // namespace wavecomp
