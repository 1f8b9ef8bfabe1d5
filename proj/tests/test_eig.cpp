#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ptspec/basis.hpp"
#include "ptspec/eig.hpp"
#include "ptspec/errors.hpp"
#include "ptspec/oracles.hpp"

using namespace ptspec;

namespace {
void sort_cplx(std::vector<Complex>& v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    return std::pair{a.real(), a.imag()} < std::pair{b.real(), b.imag()};
  });
}

ComplexMatrix random_matrix(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = Complex{dist(rng), dist(rng)};
  }
  return m;
}
}  // namespace

TEST_CASE("diagonal matrix") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = Complex{1, 0};
  d(1, 1) = Complex{2, 3};
  EigenResult r = eig_complex(d);
  REQUIRE(r.converged);
  sort_cplx(r.values);
  CHECK(std::abs(r.values[0] - Complex{1, 0}) <= 1e-14);
  CHECK(std::abs(r.values[1] - Complex{2, 3}) <= 1e-14);
}

TEST_CASE("rotation block has eigenvalues +-i") {
  ComplexMatrix m(2, 2);
  m << Complex{0, 0}, Complex{1, 0}, Complex{-1, 0}, Complex{0, 0};
  EigenResult r = eig_complex(m);
  REQUIRE(r.converged);
  std::sort(r.values.begin(), r.values.end(),
            [](Complex a, Complex b) { return a.imag() < b.imag(); });
  CHECK(std::abs(r.values[0] - Complex{0, -1}) <= 1e-14);
  CHECK(std::abs(r.values[1] - Complex{0, 1}) <= 1e-14);
}

TEST_CASE("trace moments of a random 60x60 complex matrix") {
  const ComplexMatrix m = random_matrix(60, 42);
  EigenResult r = eig_complex(m);
  REQUIRE(r.converged);
  REQUIRE(r.values.size() == 60);
  const Complex tr = m.trace();
  const Complex tr2 = (m * m).trace();
  CHECK(std::abs(oracles::sum_values(r.values) - tr) <=
        1e-8 * std::max(1.0, std::abs(tr)));
  CHECK(std::abs(oracles::sum_squares(r.values) - tr2) <=
        1e-8 * std::max(1.0, std::abs(tr2)));
}

TEST_CASE("balancing is an exact similarity") {
  const ComplexMatrix m = random_matrix(20, 5);
  RealMatrix scale = RealMatrix::Identity(20, 20);
  for (int i = 0; i < 20; ++i) scale(i, i) = std::ldexp(1.0, (i * 3) % 11 - 5);
  const ComplexMatrix skewed =
      scale.cast<Complex>() * m * scale.inverse().cast<Complex>();
  EigenResult a = eig_complex(m);
  EigenResult b = eig_complex(skewed);
  REQUIRE(a.converged);
  REQUIRE(b.converged);
  sort_cplx(a.values);
  sort_cplx(b.values);
  for (int i = 0; i < 20; ++i) {
    CHECK(std::abs(a.values[i] - b.values[i]) <= 1e-9);
  }
}

TEST_CASE("pencil with identity mass matrix reduces to the direct problem") {
  const ComplexMatrix a = random_matrix(15, 9);
  EigenResult direct = eig_complex(a);
  EigenResult pencil = eig_pencil(a, RealMatrix::Identity(15, 15));
  REQUIRE(direct.converged);
  REQUIRE(pencil.converged);
  sort_cplx(direct.values);
  sort_cplx(pencil.values);
  for (int i = 0; i < 15; ++i) {
    CHECK(std::abs(direct.values[i] - pencil.values[i]) <= 1e-10);
  }
}

TEST_CASE("proportional pencil A = 2B is constant") {
  RealMatrix b = RealMatrix::Identity(10, 10);
  b(2, 5) = b(5, 2) = 0.3;
  b(7, 8) = b(8, 7) = -0.2;
  const ComplexMatrix a = 2.0 * b.cast<Complex>();
  EigenResult r = eig_pencil(a, b);
  REQUIRE(r.converged);
  for (const Complex& z : r.values) {
    CHECK(std::abs(z - Complex{2, 0}) <= 1e-10);
  }
}

TEST_CASE("degenerate mass matrix is rejected") {
  RealMatrix b = RealMatrix::Zero(4, 4);
  b(0, 0) = 1.0;  // rank deficient
  CHECK_THROWS_AS(eig_pencil(ComplexMatrix::Identity(4, 4), b), ConfigError);
}

TEST_CASE("select_real filters window and imaginary tolerance") {
  const std::vector<Complex> values = {{-5.0, 0.0},
                                       {-3.0, 1e-12},
                                       {-1.0, 0.5}};
  const std::vector<double> out = select_real(values, {-10.0, 0.0}, 1e-8);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == -5.0);
  CHECK(out[1] == -3.0);
  CHECK(select_real({}, {-1.0, 0.0}, 1e-8).empty());
  CHECK_THROWS_AS(select_real(values, {0.0, -1.0}, 1e-8), ConfigError);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(eig_complex(ComplexMatrix(2, 3)), ConfigError);
  ComplexMatrix nan_m = ComplexMatrix::Zero(2, 2);
  nan_m(0, 0) = Complex{std::nan(""), 0.0};
  CHECK_THROWS_AS(eig_complex(nan_m), ConfigError);
  EigenResult one = eig_complex(ComplexMatrix::Constant(1, 1, Complex{4, 2}));
  REQUIRE(one.converged);
  CHECK(one.values[0] == Complex{4, 2});
}

TEST_CASE("determinant scan matches the eigenvalue product") {
  BasisConfig cfg;
  cfg.n_basis = 30;
  auto [a, b] = build_wc_pencil(20.0, 5.0, cfg);
  EigenResult eig = eig_pencil(a, b);
  REQUIRE(eig.converged);
  Eigen::LLT<RealMatrix> llt(b);
  double log_det_b = 0.0;
  for (int i = 0; i < b.rows(); ++i) {
    log_det_b += 2.0 * std::log(RealMatrix(llt.matrixL())(i, i));
  }
  const std::vector<double> grid = {-17.0, -12.0, -8.0, -4.0, -1.5};
  const std::vector<LogDet> scan = det_scan(a, b, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const LogDet ref = det_from_eigenvalues(eig.values, log_det_b, grid[i]);
    CHECK(std::abs(scan[i].log_abs - ref.log_abs) <=
          1e-8 * std::max(1.0, std::abs(ref.log_abs)));
    const Complex ph1{std::cos(scan[i].arg), std::sin(scan[i].arg)};
    const Complex ph2{std::cos(ref.arg), std::sin(ref.arg)};
    CHECK(std::abs(ph1 - ph2) <= 1e-8);
  }
}
