#include "wavecomp/fitting.hpp"

#include <cmath>
#include <cstddef>

#include "wavecomp/error.hpp"

namespace wavecomp {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("fit_line: size mismatch");
  const int n = static_cast<int>(x.size());
  if (n < 2) throw DomainError("fit_line: need >=2 points");
  double sx = 0.0, sy = 0.0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw DomainError("fit_line: abscissae are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  // r2 = 1 - SS_res/SS_tot; degenerate flat data counts as a perfect fit.
  f.r2 = (syy > 0.0) ? std::max(0.0, 1.0 - (syy - sxy * sxy / sxx) / syy) : 1.0;
  f.n = n;
  return f;
}

namespace {

DecayFit log_fit(const std::vector<double>& t, const std::vector<double>& y,
                 double floor_abs, bool power_law) {
  if (t.size() != y.size()) throw DomainError("decay fit: size mismatch");
  std::vector<double> xs, ys;
  bool truncated = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(y[i] > floor_abs)) {  // first sub-floor sample ends the usable window
      truncated = true;
      break;
    }
    xs.push_back(power_law ? std::log1p(t[i]) : t[i]);
    ys.push_back(std::log(y[i]));
  }
  DecayFit d;
  d.points = static_cast<int>(xs.size());
  if (d.points < 3) {
    d.underflow = true;
    return d;
  }
  const LineFit lf = fit_line(xs, ys);
  d.rate = -lf.slope;
  d.prefactor = std::exp(lf.intercept);
  d.r2 = lf.r2;
  d.underflow = truncated;
  return d;
}

}  // namespace

DecayFit fit_exponential(const std::vector<double>& t, const std::vector<double>& y,
                         double floor_abs) {
  return log_fit(t, y, floor_abs, false);
}

DecayFit fit_power(const std::vector<double>& t, const std::vector<double>& y,
                   double floor_abs) {
  return log_fit(t, y, floor_abs, true);
}

DecayLaw fit_decay(const std::vector<double>& t, const std::vector<double>& y,
                   DecayModel model) {
  if (t.size() != y.size()) throw DomainError("fit_decay: size mismatch");
  if (t.size() < 10) throw DomainError("fit_decay: need >=10 samples");
  std::vector<double> xs(t.size()), ys(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(y[i] > 0.0)) throw DomainError("fit_decay: values must be positive");
    xs[i] = (model == DecayModel::power) ? std::log1p(t[i]) : t[i];
    ys[i] = std::log(y[i]);
  }
  const LineFit lf = fit_line(xs, ys);
  DecayLaw law;
  law.exponent = lf.slope;
  law.prefactor = std::exp(lf.intercept);
  law.r2 = lf.r2;
  return law;
}

}  // namespace wavecomp
