#include "ptspec/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "ptspec/errors.hpp"

namespace ptspec {
namespace oracles {

namespace {

// bisection on a sign change of f, assuming f(lo) and f(hi) differ in sign
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double f_lo, double tol) {
  const bool neg = f_lo < 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == neg) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> grid_roots(const std::function<double(double)>& f,
                               double lo, double hi, int points, double tol) {
  std::vector<double> roots;
  const double dx = (hi - lo) / (points - 1);
  double prev = f(lo);
  for (int i = 1; i < points; ++i) {
    const double x = lo + i * dx;
    const double cur = f(x);
    if (prev == 0.0) {
      roots.push_back(x - dx);
    } else if (prev * cur < 0.0) {
      roots.push_back(bisect(f, x - dx, x, prev, tol));
    }
    prev = cur;
  }
  if (prev == 0.0) roots.push_back(hi);
  return roots;
}

}  // namespace

std::vector<double> square_well_levels(double v1, double a, double tol) {
  if (!(v1 > 0.0) || !(a > 0.0) || !(tol > 0.0)) {
    throw ConfigError("square_well_levels needs positive v1, a, tol");
  }
  auto even = [&](double e) {
    const double p = a * std::sqrt(e + v1);
    const double r = a * std::sqrt(-e);
    return p * std::sin(p) - r * std::cos(p);
  };
  auto odd = [&](double e) {
    const double p = a * std::sqrt(e + v1);
    const double r = a * std::sqrt(-e);
    return p * std::cos(p) + r * std::sin(p);
  };
  const double lo = -v1 + tol;
  const double hi = -tol;
  std::vector<double> levels;
  if (!(lo < hi)) return levels;
  for (double e : grid_roots(even, lo, hi, 4000, tol)) levels.push_back(e);
  for (double e : grid_roots(odd, lo, hi, 4000, tol)) levels.push_back(e);
  std::sort(levels.begin(), levels.end());
  return levels;
}

std::vector<double> finite_difference_levels(
    const std::function<double(double)>& v, double half_range, int points,
    double e_lo, double e_hi, double tol) {
  if (points < 3 || !(half_range > 0.0) || !(e_lo < e_hi)) {
    throw ConfigError("bad finite-difference oracle parameters");
  }
  const double h = 2.0 * half_range / (points + 1);
  std::vector<double> diag(points);
  const double off = -1.0 / (h * h);
  for (int i = 0; i < points; ++i) {
    const double x = -half_range + (i + 1) * h;
    diag[i] = 2.0 / (h * h) + v(x);
  }

  // Sturm count: number of eigenvalues of the tridiagonal matrix below e.
  auto count_below = [&](double e) {
    int count = 0;
    double d = diag[0] - e;
    if (d < 0.0) ++count;
    for (int i = 1; i < points; ++i) {
      d = (diag[i] - e) - (off * off) / d;
      if (d == 0.0) d = 1e-300;
      if (d < 0.0) ++count;
    }
    return count;
  };

  const int n_lo = count_below(e_lo);
  const int n_hi = count_below(e_hi);
  std::vector<double> levels;
  for (int k = n_lo; k < n_hi; ++k) {
    double lo = e_lo, hi = e_hi;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) > k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    levels.push_back(0.5 * (lo + hi));
  }
  return levels;
}

Complex sum_values(const std::vector<Complex>& values) {
  Complex s{0.0, 0.0};
  for (const Complex& z : values) s += z;
  return s;
}

Complex sum_squares(const std::vector<Complex>& values) {
  Complex s{0.0, 0.0};
  for (const Complex& z : values) s += z * z;
  return s;
}

}  // namespace oracles
}  // namespace ptspec
