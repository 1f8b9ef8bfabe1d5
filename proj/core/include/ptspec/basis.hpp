#pragma once

#include <utility>

#include "ptspec/errors.hpp"
#include "ptspec/types.hpp"

namespace ptspec {

/// Oscillator-basis truncation. `scale` is the basis length multiplier
/// (basis functions are eigenstates of -d2/dx2 + (x/scale)^2 / scale^2,
/// i.e. the x -> x/scale substitution); 1.0 reproduces the closed-form
/// matrix elements directly.
struct BasisConfig {
  int n_basis = 160;
  double scale = 1.0;
};

// Closed-form oscillator matrix elements (unit scale, H0 = -d2/dx2 + x2,
// H0|n> = (2n+1)|n>).
double me_p2(int m, int n);
double me_gauss(int m, int n);    // <m| exp(-x^2) |n>, log-Gamma arithmetic
double me_xgauss(int m, int n);   // <m| x exp(-x^2) |n>
double me_x(int m, int n);
double me_x2(int m, int n);

/// <m| x^2 p^2 |n>, derived from ladder operators; real but not symmetric:
///   m = n-4: -sqrt((n-3)(n-2)(n-1)n)/4      m = n-2: +sqrt((n-1)n)
///   m = n:   (2n^2 + 2n - 1)/4              m = n+2: -sqrt((n+1)(n+2))
///   m = n+4: -sqrt((n+1)(n+2)(n+3)(n+4))/4
Complex me_x2p2(int m, int n);

/// h = p^2 - v1 <exp(-x^2)> + i v2 <x exp(-x^2)> at the configured basis
/// scale. Unit scale uses the closed forms; other scales recompute the
/// Gaussian elements by quadrature.
ComplexMatrix build_gaussian_hamiltonian(double v1, double v2,
                                         const BasisConfig& cfg);

/// Linear pencil (A, B) with det(A - E B) = 0 equivalent to the
/// Wigner-Coulomb eigenproblem multiplied through by (1 + x^2):
///   A = p^2 + x^2 p^2 - v1 I + i v2 x,   B = I + x^2.
/// B is symmetric positive definite. All elements stay closed-form at any
/// scale (x^2 p^2 is scale invariant).
std::pair<ComplexMatrix, RealMatrix> build_wc_pencil(double v1, double v2,
                                                     const BasisConfig& cfg);

/// Basis scale minimising the trace of Re(h) for the Gaussian model over
/// scale in [0.3, 3] (grid search plus local refinement).
double autotune_scale(double v1, int n_basis);

}  // namespace ptspec
