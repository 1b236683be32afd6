// Uniform periodic grid helpers: index wrapping and 4-point Lagrange cubic
// interpolation of cell-centered samples.
#pragma once

#include <vector>

namespace wavecomp {

// Wraps an arbitrary (possibly negative) index onto [0, n).
int wrap_index(int i, int n);

// Reduces x onto [x0, x0 + period).
double wrap_point(double x, double x0, double period);

// Interpolates f (cell-centered samples f[i] at x0 + (i + 1/2) dx on a torus
// of period n*dx) at an arbitrary point x with a 4-point Lagrange cubic.
double torus_interp(const std::vector<double>& f, double x0, double dx,
                    double x);

}  // namespace wavecomp
