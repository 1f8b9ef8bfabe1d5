#pragma once

#include <functional>
#include <vector>

#include "ptspec/errors.hpp"
#include "ptspec/types.hpp"

namespace ptspec {

/// Gauss-Hermite rule for integrals against exp(-x^2) on the real line.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch nodes/weights (symmetric tridiagonal Jacobi matrix).
GaussHermiteRule gauss_hermite(int n);

/// Orthonormal Hermite polynomials against exp(-x^2):
/// table(i, n) = h_n(nodes[i]) for n = 0..nmax.
RealMatrix hermite_table(const std::vector<double>& nodes, int nmax);

/// <m| f(x) |n> in the oscillator basis, computed as
/// sum_i w_i h_m(x_i) h_n(x_i) f(x_i). Exact for polynomial f of degree
/// <= 2*nodes - 1 - m - n.
double oscillator_matrix_element(int m, int n,
                                 const std::function<double(double)>& f,
                                 int nodes);

}  // namespace ptspec
