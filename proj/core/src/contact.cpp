#include "wavecomp/contact.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace wavecomp {

namespace {

// Solve a tridiagonal system in place (Thomas); rhs becomes the solution.
void thomas(std::vector<double>& lo, std::vector<double>& di,
            std::vector<double>& up, std::vector<double>& rhs) {
  const int n = static_cast<int>(di.size());
  for (int i = 1; i < n; ++i) {
    const double w = lo[i] / di[i - 1];
    di[i] -= w * up[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= di[n - 1];
  for (int i = n - 2; i >= 0; --i) rhs[i] = (rhs[i] - up[i] * rhs[i + 1]) / di[i];
}

struct LogDerivs {
  double Th, Th1, l1, l2, l3, l4, Th2, Th3, Th4;
};

LogDerivs log_chain(double a, double xi, double Th, double Th1) {
  LogDerivs d;
  d.Th = Th;
  d.Th1 = Th1;
  d.l1 = Th1 / Th;
  d.l2 = -xi * Th1 / (2.0 * a);
  d.Th2 = Th * (d.l2 + d.l1 * d.l1);
  d.l3 = -(Th1 + xi * d.Th2) / (2.0 * a);
  d.Th3 = Th * (d.l3 + 3.0 * d.l1 * d.l2 + d.l1 * d.l1 * d.l1);
  d.l4 = -(2.0 * d.Th2 + xi * d.Th3) / (2.0 * a);
  d.Th4 = Th * (d.l4 + 4.0 * d.l1 * d.l3 + 3.0 * d.l2 * d.l2 +
                6.0 * d.l1 * d.l1 * d.l2 + d.l1 * d.l1 * d.l1 * d.l1);
  return d;
}

// Fourth-order first derivative of node values (one-sided near the ends),
// written in first-difference form so flat stretches differentiate to exact
// zeros instead of cancellation noise.
std::vector<double> fd4_derivative(const std::vector<double>& y, double h) {
  const int n = static_cast<int>(y.size());
  std::vector<double> dy(n - 1), d(n);
  for (int i = 0; i + 1 < n; ++i) dy[i] = y[i + 1] - y[i];
  for (int i = 2; i < n - 2; ++i)
    d[i] = (-dy[i - 2] + 7 * dy[i - 1] + 7 * dy[i] - dy[i + 1]) / (12 * h);
  d[0] = (25 * dy[0] - 23 * dy[1] + 13 * dy[2] - 3 * dy[3]) / (12 * h);
  d[1] = (3 * dy[0] + 13 * dy[1] - 5 * dy[2] + dy[3]) / (12 * h);
  d[n - 1] = (25 * dy[n - 2] - 23 * dy[n - 3] + 13 * dy[n - 4] - 3 * dy[n - 5]) /
             (12 * h);
  d[n - 2] =
      (3 * dy[n - 2] + 13 * dy[n - 3] - 5 * dy[n - 4] + dy[n - 5]) / (12 * h);
  return d;
}

}  // namespace

ContactProfile::ContactProfile(double a, double theta_minus, double theta_plus,
                               const ContactOptions& opts) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw DomainError("contact: diffusion coefficient must be positive");
  if (!(theta_minus > 0.0) || !(theta_plus > 0.0))
    throw DomainError("contact: boundary temperatures must be positive");
  if (opts.cells < 4096)
    throw DomainError("contact: need at least 4096 grid cells");
  a_ = a;
  th_m_ = theta_minus;
  th_p_ = theta_plus;
  solve(opts);
}

void ContactProfile::solve(const ContactOptions& opts) {
  L_ = opts.half_width;
  n_ = opts.cells;

  const double dth = th_p_ - th_m_;
  const double mean = 0.5 * (th_p_ + th_m_);
  const double rel_jump = std::abs(dth) / mean;

  for (int attempt = 0;; ++attempt) {
    h_ = 2.0 * L_ / n_;
    th_.assign(n_ + 1, mean);

    if (rel_jump < 1e-15) {  // exact constant profile
      for (int i = 0; i <= n_; ++i) th_[i] = mean;
      break;
    }

    // Initial guess: tanh ramp on the diffusive width scale.
    const double w = std::sqrt(4.0 * a_ / mean);
    for (int i = 0; i <= n_; ++i) {
      const double xi = node(i);
      th_[i] = mean + 0.5 * dth * std::tanh(xi / (2.0 * w));
    }
    th_[0] = th_m_;
    th_[n_] = th_p_;

    // Damped Newton on the h^2/a - scaled residual.
    const int m = n_ - 1;  // interior unknowns
    std::vector<double> F(m), lo(m), di(m), up(m), y(th_);
    auto residual = [&](const std::vector<double>& yy, std::vector<double>& out) {
      double sup = 0.0;
      for (int i = 1; i < n_; ++i) {
        const double mu_ = 0.5 * (yy[i] + yy[i + 1]);
        const double ml = 0.5 * (yy[i - 1] + yy[i]);
        const double U = (yy[i + 1] - yy[i]) / mu_;
        const double W = (yy[i] - yy[i - 1]) / ml;
        const double c = h_ * node(i) / (4.0 * a_);
        out[i - 1] = U - W + c * (yy[i + 1] - yy[i - 1]);
        sup = std::max(sup, std::abs(out[i - 1]));
      }
      return sup;
    };

    double fnorm = residual(y, F);
    bool converged = false;
    for (int it = 0; it < opts.max_newton && !converged; ++it) {
      if (fnorm <= opts.newton_tol) {
        converged = true;
        break;
      }
      for (int i = 1; i < n_; ++i) {
        const double mu_ = 0.5 * (y[i] + y[i + 1]);
        const double ml = 0.5 * (y[i - 1] + y[i]);
        const double U = (y[i + 1] - y[i]) / mu_;
        const double W = (y[i] - y[i - 1]) / ml;
        const double c = h_ * node(i) / (4.0 * a_);
        lo[i - 1] = 1.0 / ml + W / (2.0 * ml) - c;
        di[i - 1] = -1.0 / mu_ - U / (2.0 * mu_) - 1.0 / ml + W / (2.0 * ml);
        up[i - 1] = 1.0 / mu_ - U / (2.0 * mu_) + c;
      }
      std::vector<double> rhs(F);
      for (double& r : rhs) r = -r;
      std::vector<double> dl(lo), dd(di), du(up);
      thomas(dl, dd, du, rhs);

      double alpha = 1.0;
      bool stepped = false;
      std::vector<double> ytry(y);
      for (int ls = 0; ls < 40; ++ls, alpha *= 0.5) {
        bool positive = true;
        for (int i = 1; i < n_; ++i) {
          ytry[i] = y[i] + alpha * rhs[i - 1];
          if (!(ytry[i] > 0.0)) positive = false;
        }
        if (!positive) continue;
        std::vector<double> Ftry(m);
        const double ftry = residual(ytry, Ftry);
        if (ftry <= (1.0 - 1e-4 * alpha) * fnorm) {
          y = ytry;
          F = Ftry;
          fnorm = ftry;
          stepped = true;
          break;
        }
      }
      if (!stepped) {
        if (fnorm <= 1e-10) {  // stalled at the roundoff floor
          converged = true;
          break;
        }
        throw NumericError("contact: Newton line search failed at residual " +
                           std::to_string(fnorm));
      }
    }
    if (!converged && fnorm > opts.newton_tol && fnorm > 1e-10)
      throw NumericError("contact: Newton did not converge, residual " +
                         std::to_string(fnorm));
    th_ = y;

    // Tails must be flat; otherwise enlarge the domain and retry.
    double max_slope = 0.0;
    for (int i = 1; i <= n_; ++i)
      max_slope = std::max(max_slope, std::abs(th_[i] - th_[i - 1]) / h_);
    const double tail = std::max(std::abs(th_[1] - th_[0]),
                                 std::abs(th_[n_] - th_[n_ - 1])) /
                        h_;
    if (tail <= 1e-12 * max_slope || rel_jump < 1e-15) break;
    if (attempt >= opts.max_doublings)
      throw ResolutionError(
          "contact: profile tails not flat at half-width " + std::to_string(L_) +
          "; diffusion too strong for the requested domain");
    L_ *= 2.0;
    if (n_ < 65536) n_ *= 2;
  }

  build_tables();
}

void ContactProfile::build_tables() {
  d1_ = fd4_derivative(th_, h_);
  const double dth = std::abs(th_p_ - th_m_);
  if (dth < 1e-15 * (th_p_ + th_m_)) {
    std::fill(d1_.begin(), d1_.end(), 0.0);
    d2_.assign(n_ + 1, 0.0);
    return;
  }
  d2_.resize(n_ + 1);
  for (int i = 0; i <= n_; ++i) {
    const double xi = node(i);
    const double l1 = d1_[i] / th_[i];
    const double l2 = -xi * d1_[i] / (2.0 * a_);
    d2_[i] = th_[i] * (l2 + l1 * l1);
  }
}

double ContactProfile::eval(double xi, int k) const {
  if (k < 0 || k > 4) throw DomainError("contact eval: derivative order 0..4");
  if (xi <= -L_) return k == 0 ? th_m_ : 0.0;
  if (xi >= L_) return k == 0 ? th_p_ : 0.0;

  const int i = std::min(n_ - 1, static_cast<int>((xi + L_) / h_));
  const double s = (xi - node(i)) / h_;
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
  const auto hermite = [&](const std::vector<double>& f,
                           const std::vector<double>& fp) {
    return h00 * f[i] + h10 * h_ * fp[i] + h01 * f[i + 1] + h11 * h_ * fp[i + 1];
  };

  const double Th = hermite(th_, d1_);
  if (k == 0) return Th;
  const double Th1 = hermite(d1_, d2_);
  if (k == 1) return Th1;
  const LogDerivs d = log_chain(a_, xi, Th, Th1);
  return k == 2 ? d.Th2 : (k == 3 ? d.Th3 : d.Th4);
}

double ContactProfile::log_deriv(double xi, int k) const {
  if (k < 1 || k > 4) throw DomainError("contact log_deriv: order 1..4");
  if (std::abs(xi) >= L_) return 0.0;
  const double Th = eval(xi, 0), Th1 = eval(xi, 1);
  const LogDerivs d = log_chain(a_, xi, Th, Th1);
  return k == 1 ? d.l1 : (k == 2 ? d.l2 : (k == 3 ? d.l3 : d.l4));
}

double ContactProfile::ode_residual_sup() const {
  const std::vector<double> t1 = fd4_derivative(th_, h_);
  const std::vector<double> t2 = fd4_derivative(t1, h_);
  double sup = 0.0;
  for (int i = 2; i <= n_ - 2; ++i) {
    const double r = a_ * (t2[i] / th_[i] - t1[i] * t1[i] / (th_[i] * th_[i])) +
                     0.5 * node(i) * t1[i];
    sup = std::max(sup, std::abs(r));
  }
  return sup;
}

double ContactProfile::gaussian_rate(int sign) const {
  if (sign != 1 && sign != -1)
    throw DomainError("contact gaussian_rate: sign must be +-1");
  // Fit ln|Theta'| ~ c - C2 xi^2 over the tail nodes, windowed by slope value
  // so neither the core nor the arithmetic noise floor pollutes the fit.
  double peak = 0.0;
  for (double d : d1_) peak = std::max(peak, std::abs(d));
  if (peak == 0.0)
    throw NumericError("contact gaussian_rate: profile is constant");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int i = 0; i <= n_; ++i) {
    const double xi = node(i);
    if (sign * xi <= 0.0) continue;
    const double d = std::abs(d1_[i]);
    if (d < 1e-9 * peak || d > 1e-2 * peak) continue;
    const double X = xi * xi, Y = std::log(d);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
    ++cnt;
  }
  if (cnt < 10)
    throw NumericError("contact gaussian_rate: too few tail points to fit");
  const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  return -slope;
}

ContactWave::ContactWave(const GasParams& g, double p_star, double theta_minus,
                         double theta_plus, const ContactOptions& opts)
    : gas_(g), p_star_(p_star) {
  validate(g);
  if (!(p_star > 0.0)) throw DomainError("contact wave: p_star must be positive");
  const double a =
      g.kappa * p_star * (g.gamma - 1.0) / (g.gamma * g.R * g.R);
  b_ = g.kappa * (g.gamma - 1.0) / (g.gamma * g.R);
  prof_ = ContactProfile(a, theta_minus, theta_plus, opts);
}

double ContactWave::theta(double x, double t) const {
  return prof_.eval(x / std::sqrt(1.0 + t), 0);
}
double ContactWave::theta_x(double x, double t) const {
  const double r = 1.0 / std::sqrt(1.0 + t);
  return prof_.eval(x * r, 1) * r;
}
double ContactWave::theta_t(double x, double t) const {
  const double r = 1.0 / std::sqrt(1.0 + t);
  const double xi = x * r;
  return -0.5 * xi * prof_.eval(xi, 1) * r * r;
}
double ContactWave::theta_xx(double x, double t) const {
  const double r = 1.0 / std::sqrt(1.0 + t);
  return prof_.eval(x * r, 2) * r * r;
}
double ContactWave::v(double x, double t) const {
  return gas_.R / p_star_ * theta(x, t);
}
double ContactWave::v_x(double x, double t) const {
  return gas_.R / p_star_ * theta_x(x, t);
}
double ContactWave::v_t(double x, double t) const {
  return gas_.R / p_star_ * theta_t(x, t);
}
double ContactWave::u(double x, double t) const {
  const double r = 1.0 / std::sqrt(1.0 + t);
  return b_ * prof_.log_deriv(x * r, 1) * r;
}
double ContactWave::u_x(double x, double t) const {
  const double r = 1.0 / std::sqrt(1.0 + t);
  return b_ * prof_.log_deriv(x * r, 2) * r * r;
}
double ContactWave::u_xx(double x, double t) const {
  const double r = 1.0 / std::sqrt(1.0 + t);
  return b_ * prof_.log_deriv(x * r, 3) * r * r * r;
}
double ContactWave::u_t(double x, double t) const {
  const double r = 1.0 / std::sqrt(1.0 + t);
  const double xi = x * r;
  const double l1 = prof_.log_deriv(xi, 1), l2 = prof_.log_deriv(xi, 2);
  return -0.5 * b_ * (xi * l2 + l1) * r * r * r;
}

double ContactWave::Q1(double x, double t) const {
  const double r = 1.0 / std::sqrt(1.0 + t);
  const double xi = x * r;
  const double Th = prof_.eval(xi, 0), Th1 = prof_.eval(xi, 1);
  const double l1 = prof_.log_deriv(xi, 1), l2 = prof_.log_deriv(xi, 2),
               l3 = prof_.log_deriv(xi, 3);
  const double visc = gas_.mu * (p_star_ / gas_.R) * (l3 / Th - l2 * Th1 / (Th * Th));
  return b_ * r * r * r * (-0.5 * (xi * l2 + l1) - visc);
}

double ContactWave::Q2(double x, double t) const {
  const double r = 1.0 / std::sqrt(1.0 + t);
  const double xi = x * r;
  const double Th = prof_.eval(xi, 0), Th1 = prof_.eval(xi, 1);
  const double l1 = prof_.log_deriv(xi, 1), l2 = prof_.log_deriv(xi, 2),
               l3 = prof_.log_deriv(xi, 3);
  const double visc = gas_.mu * (p_star_ / gas_.R) *
                      ((l2 * l2 + l1 * l3) / Th - l1 * l2 * Th1 / (Th * Th));
  return b_ * b_ * r * r * r * r * (-0.5 * l1 * (xi * l2 + l1) - visc);
}

}  // namespace wavecomp
