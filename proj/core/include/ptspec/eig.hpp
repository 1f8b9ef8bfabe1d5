#pragma once

#include <utility>
#include <vector>

#include "ptspec/errors.hpp"
#include "ptspec/types.hpp"

namespace ptspec {

/// Dense non-Hermitian eigenvalues. `iterations` is -1: the Schur backend
/// does not report its QR sweep count (its internal budget is 30 per row,
/// i.e. 30*dim total).
struct EigenResult {
  std::vector<Complex> values;
  int iterations = -1;
  bool converged = false;
};

/// Parlett-Reinsch balancing with power-of-two factors (an exact diagonal
/// similarity; eigenvalues are bit-for-bit invariant in exact arithmetic).
ComplexMatrix balance(const ComplexMatrix& m);

/// All eigenvalues of m: balancing, Hessenberg reduction, shifted complex
/// QR. Non-convergence is reported via converged = false, never silently.
EigenResult eig_complex(const ComplexMatrix& m);

/// Generalized eigenvalues of (A, B) with B symmetric positive definite:
/// B = L L^T, C = L^-1 A L^-T, then eig_complex(C). Throws ConfigError if
/// the factorization fails (pencil degenerate).
EigenResult eig_pencil(const ComplexMatrix& a, const RealMatrix& b);

/// Re(z), sorted ascending, for every z with |Im z| <= im_tol and
/// lo < Re z < hi.
std::vector<double> select_real(const std::vector<Complex>& values,
                                std::pair<double, double> window,
                                double im_tol);

/// Default tolerance separating truncation noise from genuine symmetry
/// breaking: 1e-6 * max(1, v1).
double default_im_tol(double v1);

/// log|det(A - E B)| and arg det(A - E B), one LU factorization per grid
/// point. Cross-checks the pencil reduction against direct determinant
/// scanning.
struct LogDet {
  double log_abs = 0.0;
  double arg = 0.0;
};
std::vector<LogDet> det_scan(const ComplexMatrix& a, const RealMatrix& b,
                             const std::vector<double>& e_grid);

/// log/arg of det(B) * prod_i (values[i] - E), the determinant implied by
/// the pencil eigenvalues; comparison partner for det_scan.
LogDet det_from_eigenvalues(const std::vector<Complex>& values,
                            double log_abs_det_b, double e);

}  // namespace ptspec
