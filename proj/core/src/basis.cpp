#include "ptspec/basis.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "ptspec/errors.hpp"
#include "ptspec/quadrature.hpp"

namespace ptspec {

namespace {

// sin(j*pi/2) for odd j and cos(j*pi/2) for even j, as exact integers.
int sin_half_pi_sign(int j) {
  const int jm = ((j % 4) + 4) % 4;  // 1 or 3 for odd j
  return jm == 1 ? 1 : -1;
}

int cos_half_pi_sign(int j) {
  const int jm = ((j % 4) + 4) % 4;  // 0 or 2 for even j
  return jm == 0 ? 1 : -1;
}

// exp(lgamma(g_arg) - (log(2 pi) + lgamma(m+1) + lgamma(n+1)) / 2); keeps
// n in the hundreds finite where raw factorials overflow. The factorial
// logs are summed first so the result is exactly symmetric in (m, n).
double gamma_ratio(double g_arg, int m, int n) {
  const double fact_logs = std::lgamma(m + 1.0) + std::lgamma(n + 1.0);
  const double log_val =
      std::lgamma(g_arg) - 0.5 * (std::log(2.0 * M_PI) + fact_logs);
  return std::exp(log_val);
}

bool me_gauss_fault_enabled() {
  static const bool enabled = [] {
    const char* fault = std::getenv("PTSPEC_FAULT");
    return fault != nullptr && std::strcmp(fault, "me_gauss") == 0;
  }();
  return enabled;
}

void check_indices(int m, int n) {
  if (m < 0 || n < 0) throw ConfigError("basis indices must be >= 0");
}

void check_basis_config(const BasisConfig& cfg) {
  if (cfg.n_basis < 2) throw ConfigError("n_basis must be >= 2");
  if (!(cfg.scale > 0.0)) throw ConfigError("basis scale must be positive");
}

}  // namespace

double me_p2(int m, int n) {
  check_indices(m, n);
  if (m == n) return 0.5 * (2.0 * n + 1.0);
  if (m == n - 2) return -0.5 * std::sqrt((n - 1.0) * n);
  if (m == n + 2) return -0.5 * std::sqrt((n + 1.0) * (n + 2.0));
  return 0.0;
}

double me_gauss(int m, int n) {
  check_indices(m, n);
  if ((m - n) % 2 != 0) return 0.0;
  double value =
      cos_half_pi_sign(m - n) * gamma_ratio(0.5 * (m + n + 1.0), m, n);
  if (me_gauss_fault_enabled() && m == 2 && n == 2) value += 1e-3;
  return value;
}

double me_xgauss(int m, int n) {
  check_indices(m, n);
  if ((m + n) % 2 == 0) return 0.0;
  const int j = m - n;
  const double prefactor =
      static_cast<double>(j) / (2.0 * std::sqrt(2.0) * sin_half_pi_sign(j));
  return prefactor * gamma_ratio(0.5 * (m + n), m, n);
}

double me_x(int m, int n) {
  check_indices(m, n);
  if (m == n - 1) return std::sqrt(0.5 * n);
  if (m == n + 1) return std::sqrt(0.5 * (n + 1.0));
  return 0.0;
}

double me_x2(int m, int n) {
  check_indices(m, n);
  if (m == n) return 0.5 * (2.0 * n + 1.0);
  if (m == n - 2) return 0.5 * std::sqrt((n - 1.0) * n);
  if (m == n + 2) return 0.5 * std::sqrt((n + 1.0) * (n + 2.0));
  return 0.0;
}

Complex me_x2p2(int m, int n) {
  check_indices(m, n);
  double value = 0.0;
  if (m == n - 4) {
    value = -0.25 * std::sqrt((n - 3.0) * (n - 2.0) * (n - 1.0) * n);
  } else if (m == n - 2) {
    value = std::sqrt((n - 1.0) * n);
  } else if (m == n) {
    value = 0.25 * (2.0 * n * n + 2.0 * n - 1.0);
  } else if (m == n + 2) {
    value = -std::sqrt((n + 1.0) * (n + 2.0));
  } else if (m == n + 4) {
    value = -0.25 * std::sqrt((n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0));
  }
  return {value, 0.0};
}

namespace {

// <m| f(x) |n> for all m, n < dim in one pass: T^t diag(w f) T.
RealMatrix quadrature_block(int dim, double scale,
                            const std::function<double(double)>& f) {
  const int nodes = std::min(320, std::max(200, dim + 120));
  const GaussHermiteRule rule = gauss_hermite(nodes);
  const RealMatrix table = hermite_table(rule.nodes, dim - 1);
  Eigen::VectorXd wf(nodes);
  for (int i = 0; i < nodes; ++i) {
    wf(i) = rule.weights[i] * f(scale * rule.nodes[i]);
  }
  return table.transpose() * wf.asDiagonal() * table;
}

}  // namespace

ComplexMatrix build_gaussian_hamiltonian(double v1, double v2,
                                         const BasisConfig& cfg) {
  check_basis_config(cfg);
  const int dim = cfg.n_basis;
  const double scale = cfg.scale;
  ComplexMatrix h(dim, dim);

  if (scale == 1.0) {
    for (int m = 0; m < dim; ++m) {
      for (int n = 0; n < dim; ++n) {
        h(m, n) = Complex{me_p2(m, n) - v1 * me_gauss(m, n),
                          v2 * me_xgauss(m, n)};
      }
    }
    return h;
  }

  // x -> x/scale substitution: kinetic part scales exactly, the Gaussian
  // factors are recomputed by quadrature at the stretched width.
  const RealMatrix gauss = quadrature_block(
      dim, scale, [](double x) { return std::exp(-x * x); });
  const RealMatrix xgauss = quadrature_block(
      dim, scale, [](double x) { return x * std::exp(-x * x); });
  const double inv_s2 = 1.0 / (scale * scale);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      h(m, n) = Complex{inv_s2 * me_p2(m, n) - v1 * gauss(m, n),
                        v2 * xgauss(m, n)};
    }
  }
  return h;
}

std::pair<ComplexMatrix, RealMatrix> build_wc_pencil(double v1, double v2,
                                                     const BasisConfig& cfg) {
  check_basis_config(cfg);
  const int dim = cfg.n_basis;
  const double s = cfg.scale;
  ComplexMatrix a(dim, dim);
  RealMatrix b(dim, dim);
  // x^2 p^2 is invariant under the basis stretch; p^2, x and x^2 scale by
  // 1/s^2, s and s^2.
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      double re = me_p2(m, n) / (s * s) + me_x2p2(m, n).real();
      if (m == n) re -= v1;
      a(m, n) = Complex{re, v2 * s * me_x(m, n)};
      b(m, n) = (m == n ? 1.0 : 0.0) + s * s * me_x2(m, n);
    }
  }
  return {std::move(a), std::move(b)};
}

double autotune_scale(double v1, int n_basis) {
  if (n_basis < 2) throw ConfigError("n_basis must be >= 2");
  const int nodes = std::min(320, std::max(200, n_basis + 120));
  const GaussHermiteRule rule = gauss_hermite(nodes);
  const RealMatrix table = hermite_table(rule.nodes, n_basis - 1);

  auto trace_re_h = [&](double scale) {
    double kinetic = 0.0;
    for (int n = 0; n < n_basis; ++n) kinetic += 0.5 * (2.0 * n + 1.0);
    kinetic /= scale * scale;
    double pot = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double f =
          rule.weights[i] * std::exp(-scale * scale * rule.nodes[i] *
                                     rule.nodes[i]);
      double diag_sum = 0.0;
      for (int n = 0; n < n_basis; ++n) {
        diag_sum += table(i, n) * table(i, n);
      }
      pot += f * diag_sum;
    }
    return kinetic - v1 * pot;
  };

  double best_scale = 1.0;
  double best_trace = trace_re_h(1.0);
  for (double s = 0.3; s <= 3.0 + 1e-12; s += 0.05) {
    const double t = trace_re_h(s);
    if (t < best_trace) {
      best_trace = t;
      best_scale = s;
    }
  }
  // golden-section polish around the grid minimum
  double lo = std::max(0.3, best_scale - 0.05);
  double hi = std::min(3.0, best_scale + 0.05);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = trace_re_h(x1), f2 = trace_re_h(x2);
  while (hi - lo > 1e-3) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = trace_re_h(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = trace_re_h(x2);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ptspec
