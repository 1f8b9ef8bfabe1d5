#pragma once

#include "ptspec/shooting.hpp"
#include "ptspec/types.hpp"

namespace ptspec {

/// p = a*sqrt(E + V1 - i V2), q = a*sqrt(E + V1 + i V2) (principal roots),
/// r = a*sqrt(-E). For real E, q = conj(p).
struct RectEliminantVars {
  Complex p;
  Complex q;
  double r = 0.0;
};

RectEliminantVars rect_vars(double E, double v1, double v2, double a);

/// Exact bound-state condition of the rectangular well of half-width a:
///   D = 2 p q r cos p cos q + p (r^2 - q^2) cos p sin q
///       + q (r^2 - p^2) sin p cos q - r (p^2 + q^2) sin p sin q.
/// D is real for real E (every term is self-conjugate under p <-> q); the
/// real part is returned and the imaginary part asserted below 1e-9 scale.
double rect_eliminant(double E, double v1, double v2, double a);

/// All roots of the eliminant on (-v1 + tol, -tol): 2000-point bracketing
/// grid plus bisection to tol. residuals hold |D| at the refined root.
SpectrumResult rect_spectrum(double v1, double v2, double a, double tol);

}  // namespace ptspec
