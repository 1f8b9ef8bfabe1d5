#pragma once

#include <functional>
#include <vector>

#include "ptspec/types.hpp"

namespace ptspec {
namespace oracles {

// Independent reference solvers used only for cross-checking; none of them
// share code with the production solve paths.

/// Square-well levels of depth v1 and half-width a from the transcendental
/// conditions p tan p = r (even) and -p cot p = r (odd), written in the
/// pole-free forms p sin p - r cos p and p cos p + r sin p and bisected on
/// a dense grid.
std::vector<double> square_well_levels(double v1, double a, double tol);

/// Bound states of psi'' = (V - E) psi on [-half_range, half_range] with
/// Dirichlet ends: central finite differences on `points` interior nodes,
/// eigenvalues in (e_lo, e_hi) by Sturm-sequence bisection of the
/// tridiagonal matrix. Real potentials only.
std::vector<double> finite_difference_levels(
    const std::function<double(double)>& v, double half_range, int points,
    double e_lo, double e_hi, double tol);

/// sum(values) and sum(values^2); compared against tr(M) and tr(M^2).
Complex sum_values(const std::vector<Complex>& values);
Complex sum_squares(const std::vector<Complex>& values);

}  // namespace oracles
}  // namespace ptspec
