#include "ptspec/eig.hpp"

#include <algorithm>
#include <cmath>

#include "ptspec/errors.hpp"

namespace ptspec {

namespace {

inline double mag1(const Complex& z) {
  return std::abs(z.real()) + std::abs(z.imag());
}

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a > M_PI) a -= 2.0 * M_PI;
  if (a <= -M_PI) a += 2.0 * M_PI;
  return a;
}

}  // namespace

ComplexMatrix balance(const ComplexMatrix& m) {
  ComplexMatrix a = m;
  const int n = static_cast<int>(a.rows());
  constexpr double kRadix = 2.0;
  constexpr double kRadixSq = kRadix * kRadix;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += mag1(a(j, i));
        r += mag1(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      double g = r / kRadix;
      while (c < g) {
        f *= kRadix;
        c *= kRadixSq;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= kRadixSq;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        const double inv = 1.0 / f;
        a.row(i) *= inv;
        a.col(i) *= f;  // exact: powers of two
      }
    }
  }
  return a;
}

EigenResult eig_complex(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw ConfigError("eig_complex needs a square matrix of dim >= 1");
  }
  if (!m.allFinite()) throw ConfigError("matrix entries must be finite");

  EigenResult result;
  if (m.rows() == 1) {
    result.values = {m(0, 0)};
    result.converged = true;
    return result;
  }

  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  solver.compute(balance(m), /*computeEigenvectors=*/false);
  result.converged = (solver.info() == Eigen::Success);
  result.values.reserve(m.rows());
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    result.values.push_back(solver.eigenvalues()(i));
  }
  return result;
}

EigenResult eig_pencil(const ComplexMatrix& a, const RealMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw ConfigError("pencil matrices must be square and of equal size");
  }
  Eigen::LLT<RealMatrix> llt(b);
  if (llt.info() != Eigen::Success) {
    throw ConfigError("pencil degenerate: B is not positive definite");
  }
  const ComplexMatrix l = RealMatrix(llt.matrixL()).cast<Complex>();
  // C = L^-1 A L^-T shares the pencil's eigenvalues
  const ComplexMatrix y = l.triangularView<Eigen::Lower>().solve(a);
  const ComplexMatrix c =
      l.triangularView<Eigen::Lower>().solve(y.transpose()).transpose();
  return eig_complex(c);
}

std::vector<double> select_real(const std::vector<Complex>& values,
                                std::pair<double, double> window,
                                double im_tol) {
  if (!(window.first < window.second)) {
    throw ConfigError("window must satisfy lo < hi");
  }
  if (!(im_tol > 0.0)) throw ConfigError("im_tol must be positive");
  std::vector<double> out;
  for (const Complex& z : values) {
    if (std::abs(z.imag()) <= im_tol && z.real() > window.first &&
        z.real() < window.second) {
      out.push_back(z.real());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double default_im_tol(double v1) { return 1e-6 * std::max(1.0, v1); }

std::vector<LogDet> det_scan(const ComplexMatrix& a, const RealMatrix& b,
                             const std::vector<double>& e_grid) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || b.rows() != b.cols()) {
    throw ConfigError("pencil matrices must be square and of equal size");
  }
  std::vector<LogDet> out;
  out.reserve(e_grid.size());
  for (double e : e_grid) {
    const ComplexMatrix m = a - e * b.cast<Complex>();
    Eigen::PartialPivLU<ComplexMatrix> lu(m);
    LogDet d;
    for (int i = 0; i < m.rows(); ++i) {
      const Complex piv = lu.matrixLU()(i, i);
      d.log_abs += std::log(std::abs(piv));
      d.arg += std::arg(piv);
    }
    if (lu.permutationP().determinant() < 0) d.arg += M_PI;
    d.arg = wrap_angle(d.arg);
    out.push_back(d);
  }
  return out;
}

LogDet det_from_eigenvalues(const std::vector<Complex>& values,
                            double log_abs_det_b, double e) {
  LogDet d;
  d.log_abs = log_abs_det_b;
  for (const Complex& z : values) {
    const Complex factor = z - e;
    d.log_abs += std::log(std::abs(factor));
    d.arg += std::arg(factor);
  }
  d.arg = wrap_angle(d.arg);
  return d;
}

}  // namespace ptspec
