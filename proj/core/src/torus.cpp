#include "wavecomp/torus.hpp"

#include <cmath>

#include "wavecomp/error.hpp"

namespace wavecomp {

int wrap_index(int i, int n) {
  int r = i % n;
  return r < 0 ? r + n : r;
}

double wrap_point(double x, double x0, double period) {
  double s = std::fmod(x - x0, period);
  if (s < 0) s += period;
  return x0 + s;
}

double torus_interp(const std::vector<double>& f, double x0, double dx,
                    double x) {
  const int n = static_cast<int>(f.size());
  if (n < 4) throw DomainError("torus_interp: need at least 4 samples");
  const double period = n * dx;
  const double s = (wrap_point(x, x0, period) - x0) / dx - 0.5;  // node units
  const int j = static_cast<int>(std::floor(s));
  const double t = s - j;
  // Lagrange cubic through nodes j-1, j, j+1, j+2 at local coordinate t.
  const double wm1 = -t * (t - 1.0) * (t - 2.0) / 6.0;
  const double w0 = (t * t - 1.0) * (t - 2.0) / 2.0;
  const double w1 = -t * (t + 1.0) * (t - 2.0) / 2.0;
  const double w2 = t * (t * t - 1.0) / 6.0;
  return wm1 * f[wrap_index(j - 1, n)] + w0 * f[wrap_index(j, n)] +
         w1 * f[wrap_index(j + 1, n)] + w2 * f[wrap_index(j + 2, n)];
}

}  // namespace wavecomp
