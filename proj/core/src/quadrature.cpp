#include "ptspec/quadrature.hpp"

#include <cmath>

#include "ptspec/errors.hpp"

namespace ptspec {

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw ConfigError("quadrature order must be >= 1");
  if (n > 350) {
    // the Christoffel sums below hold exp(x_max^2) ~ exp(2n); past ~350
    // nodes that overflows doubles
    throw ConfigError("quadrature order capped at 350");
  }
  // Golub-Welsch nodes: eigenvalues of the Jacobi matrix of the Hermite
  // recurrence (zero diagonal, off-diagonal sqrt(k/2))
  RealMatrix jacobi = RealMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = std::sqrt(0.5 * k);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver;
  solver.compute(jacobi, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("Gauss-Hermite node computation failed");
  }
  GaussHermiteRule rule;
  rule.nodes.resize(n);
  for (int i = 0; i < n; ++i) rule.nodes[i] = solver.eigenvalues()(i);

  // weights from the Christoffel function, w_i = 1 / sum_k h_k(x_i)^2.
  // Eigenvector-based weights underflow at the extreme nodes (the first
  // eigenvector component drops below machine noise around 1e-16, so the
  // squared value is garbage near 1e-32 where the true weight is ~1e-160);
  // the positive-sum form stays accurate at every node.
  const RealMatrix table = hermite_table(rule.nodes, n - 1);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += table(i, k) * table(i, k);
    rule.weights[i] = 1.0 / sum;
  }
  return rule;
}

RealMatrix hermite_table(const std::vector<double>& nodes, int nmax) {
  const int rows = static_cast<int>(nodes.size());
  RealMatrix table(rows, nmax + 1);
  const double h0 = std::pow(M_PI, -0.25);
  for (int i = 0; i < rows; ++i) {
    const double x = nodes[i];
    table(i, 0) = h0;
    if (nmax >= 1) table(i, 1) = std::sqrt(2.0) * x * h0;
    for (int k = 1; k < nmax; ++k) {
      table(i, k + 1) = std::sqrt(2.0 / (k + 1)) * x * table(i, k) -
                        std::sqrt(static_cast<double>(k) / (k + 1)) *
                            table(i, k - 1);
    }
  }
  return table;
}

double oscillator_matrix_element(int m, int n,
                                 const std::function<double(double)>& f,
                                 int nodes) {
  if (m < 0 || n < 0) throw ConfigError("basis indices must be >= 0");
  const GaussHermiteRule rule = gauss_hermite(nodes);
  const RealMatrix table = hermite_table(rule.nodes, std::max(m, n));
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) {
    sum += rule.weights[i] * table(i, m) * table(i, n) * f(rule.nodes[i]);
  }
  return sum;
}

}  // namespace ptspec
