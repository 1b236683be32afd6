// Discrete norms on cell-sampled fields.
#pragma once

#include <vector>

namespace wavecomp {

double sup_abs(const std::vector<double>& f);
double sup_abs_diff(const std::vector<double>& a, const std::vector<double>& b);

// max over derivative orders 0..m of the sup norm, with centered first and
// second differences and wrap-around indexing.
double w1inf_periodic(const std::vector<double>& f, double dx);
double w2inf_periodic(const std::vector<double>& f, double dx);

// Kahan-compensated dx * sum f_i^2, and the discrete H^1 square
// (L2 square of f plus L2 square of forward differences).
double l2_sq(const std::vector<double>& f, double dx);
double h1_sq(const std::vector<double>& f, double dx);

// Uniform entry point over the named norms.  L1/L2 are trapezoidal, Linf is
// the max-abs, H1 = sqrt(h1_sq), W2inf uses periodic centered differences.
// Throws DomainError if the field contains a NaN (or is empty).
enum class NormKind { L1, L2, Linf, H1, W2inf };
double norm(const std::vector<double>& f, double dx, NormKind kind);

}  // namespace wavecomp
