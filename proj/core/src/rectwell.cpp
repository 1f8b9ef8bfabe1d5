#include "ptspec/rectwell.hpp"

#include <algorithm>
#include <cmath>

#include "ptspec/errors.hpp"

namespace ptspec {

RectEliminantVars rect_vars(double E, double v1, double v2, double a) {
  RectEliminantVars vars;
  // principal roots; E + v1 > 0 on the scan interval keeps them continuous
  vars.p = a * std::sqrt(Complex{E + v1, -v2});
  vars.q = a * std::sqrt(Complex{E + v1, v2});
  vars.r = a * std::sqrt(-E);
  return vars;
}

double rect_eliminant(double E, double v1, double v2, double a) {
  if (!(E > -v1 && E < 0.0)) {
    throw ConfigError("rect_eliminant requires -v1 < E < 0");
  }
  const RectEliminantVars vars = rect_vars(E, v1, v2, a);
  const Complex p = vars.p, q = vars.q;
  const double r = vars.r;
  const Complex sp = std::sin(p), cp = std::cos(p);
  const Complex sq = std::sin(q), cq = std::cos(q);

  const Complex d = 2.0 * p * q * r * cp * cq + p * (r * r - q * q) * cp * sq +
                    q * (r * r - p * p) * sp * cq -
                    r * (p * p + q * q) * sp * sq;

  // q = conj(p) makes every term self-conjugate, so Im d is pure noise
  const double scale =
      1.0 + std::abs(d) + (std::abs(p) * std::abs(p) + r * r) *
                              (1.0 + std::abs(sp) * std::abs(sq)) * (1.0 + r);
  if (std::abs(d.imag()) > 1e-9 * scale) {
    throw InternalConsistencyError(
        "rect eliminant developed a non-vanishing imaginary part");
  }
  return d.real();
}

SpectrumResult rect_spectrum(double v1, double v2, double a, double tol) {
  if (!(v1 > 0.0) || !(a > 0.0)) {
    throw InvalidSpecError("rect_spectrum requires v1 > 0 and a > 0");
  }
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");

  constexpr int kPoints = 2000;
  const double lo = -v1 + tol;
  const double hi = -tol;
  SpectrumResult out;
  if (!(lo < hi)) return out;

  const double de = (hi - lo) / (kPoints - 1);
  std::vector<double> g(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    g[i] = rect_eliminant(lo + i * de, v1, v2, a);
  }

  std::vector<double> roots;
  for (int i = 0; i + 1 < kPoints; ++i) {
    if (g[i] == 0.0) {
      roots.push_back(lo + i * de);
      continue;
    }
    if (g[i] * g[i + 1] < 0.0) {
      double xa = lo + i * de, xb = xa + de;
      const bool neg = g[i] < 0.0;
      while (xb - xa > tol) {
        const double mid = 0.5 * (xa + xb);
        const double gm = rect_eliminant(mid, v1, v2, a);
        if (gm == 0.0) {
          xa = xb = mid;
          break;
        }
        if ((gm < 0.0) == neg) {
          xa = mid;
        } else {
          xb = mid;
        }
      }
      roots.push_back(0.5 * (xa + xb));
    }
  }
  if (g[kPoints - 1] == 0.0) roots.push_back(hi);

  std::sort(roots.begin(), roots.end());
  for (double r : roots) {
    if (!out.eigenvalues.empty() && r - out.eigenvalues.back() < 2.0 * tol) {
      continue;
    }
    out.eigenvalues.push_back(r);
    out.residuals.push_back(std::abs(rect_eliminant(r, v1, v2, a)));
  }
  return out;
}

}  // namespace ptspec
