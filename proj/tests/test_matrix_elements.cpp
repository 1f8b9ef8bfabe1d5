#include <doctest.h>

#include <cmath>

#include "ptspec/basis.hpp"
#include "ptspec/eig.hpp"
#include "ptspec/errors.hpp"
#include "ptspec/quadrature.hpp"

using namespace ptspec;

TEST_CASE("kinetic element spot values") {
  CHECK(me_p2(0, 0) == 0.5);
  CHECK(me_p2(0, 2) == doctest::Approx(-std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(me_p2(1, 2) == 0.0);
  CHECK(me_p2(7, 7) == 7.5);
}

TEST_CASE("gaussian element spot values") {
  CHECK(me_gauss(0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(me_gauss(0, 1) == 0.0);
  CHECK(me_gauss(0, 2) == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(me_gauss(3, 7) == me_gauss(7, 3));
}

TEST_CASE("x-gaussian element spot values") {
  CHECK(me_xgauss(0, 1) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(me_xgauss(1, 0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(me_xgauss(0, 2) == 0.0);
  CHECK(me_xgauss(2, 2) == 0.0);
}

TEST_CASE("position elements") {
  CHECK(me_x(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(me_x(1, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(me_x(0, 2) == 0.0);
  for (int n = 0; n < 6; ++n) {
    CHECK(me_x2(n, n) == doctest::Approx(0.5 * (2 * n + 1)).epsilon(1e-15));
  }
}

TEST_CASE("x^2 p^2 ladder form: diagonal and asymmetry") {
  for (int n = 0; n < 8; ++n) {
    CHECK(me_x2p2(n, n).real() ==
          doctest::Approx(0.25 * (2.0 * n * n + 2.0 * n - 1.0)).epsilon(1e-15));
    CHECK(me_x2p2(n, n).imag() == 0.0);
  }
  CHECK(me_x2p2(0, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(me_x2p2(2, 0).real() ==
        doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("closed forms match Gauss-Hermite quadrature up to n = 40") {
  const int nmax = 40;
  const int nodes = 200;
  const GaussHermiteRule rule = gauss_hermite(nodes);
  const RealMatrix table = hermite_table(rule.nodes, nmax);
  auto quad = [&](int m, int n, auto f) {
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
      sum += rule.weights[i] * table(i, m) * table(i, n) * f(rule.nodes[i]);
    }
    return sum;
  };
  double worst = 0.0;
  for (int m = 0; m <= nmax; ++m) {
    for (int n = 0; n <= nmax; ++n) {
      const double x2 = quad(m, n, [](double x) { return x * x; });
      const double x4 = quad(m, n, [](double x) { return x * x * x * x; });
      worst = std::max(worst, std::abs(me_gauss(m, n) - quad(m, n, [](double x) {
                                         return std::exp(-x * x);
                                       })));
      worst = std::max(worst,
                       std::abs(me_xgauss(m, n) - quad(m, n, [](double x) {
                                  return x * std::exp(-x * x);
                                })));
      worst = std::max(worst, std::abs(me_x(m, n) - quad(m, n, [](double x) {
                                         return x;
                                       })));
      worst = std::max(worst, std::abs(me_x2(m, n) - x2));
      worst = std::max(
          worst, std::abs(me_p2(m, n) - ((m == n ? 2.0 * n + 1.0 : 0.0) - x2)));
      worst = std::max(
          worst, std::abs(me_x2p2(m, n).real() - ((2.0 * n + 1.0) * x2 - x4)));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("specific quadrature cross-checks from the closed forms") {
  CHECK(me_gauss(2, 4) ==
        doctest::Approx(oscillator_matrix_element(
                            2, 4, [](double x) { return std::exp(-x * x); },
                            200))
            .epsilon(1e-12));
  CHECK(me_xgauss(3, 4) ==
        doctest::Approx(oscillator_matrix_element(
                            3, 4,
                            [](double x) { return x * std::exp(-x * x); },
                            200))
            .epsilon(1e-12));
}

TEST_CASE("log-gamma arithmetic keeps very large indices finite") {
  CHECK(std::isfinite(me_gauss(200, 200)));
  CHECK(me_gauss(200, 200) > 0.0);
  CHECK(std::isfinite(me_gauss(301, 299)));
  CHECK(std::isfinite(me_xgauss(250, 251)));
}

TEST_CASE("gaussian hamiltonian structure") {
  BasisConfig cfg;
  cfg.n_basis = 40;
  const ComplexMatrix h0 = build_gaussian_hamiltonian(50.0, 0.0, cfg);
  CHECK(h0.imag().cwiseAbs().maxCoeff() == 0.0);
  CHECK((h0 - h0.transpose()).cwiseAbs().maxCoeff() == 0.0);

  const ComplexMatrix hp = build_gaussian_hamiltonian(50.0, 10.0, cfg);
  const ComplexMatrix hm = build_gaussian_hamiltonian(50.0, -10.0, cfg);
  CHECK((hp - hm.conjugate()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("unit-scale quadrature path agrees with the closed forms") {
  BasisConfig closed;
  closed.n_basis = 30;
  closed.scale = 1.0;
  BasisConfig quad = closed;
  quad.scale = std::nextafter(1.0, 2.0);  // forces the quadrature branch
  const ComplexMatrix a = build_gaussian_hamiltonian(50.0, 10.0, closed);
  const ComplexMatrix b = build_gaussian_hamiltonian(50.0, 10.0, quad);
  CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("eigenvalues converge to scale-independent values") {
  // the basis stretch is variational dressing: converged levels must agree
  BasisConfig narrow;
  narrow.n_basis = 140;
  narrow.scale = 0.8;
  BasisConfig unit;
  unit.n_basis = 140;
  unit.scale = 1.0;
  const auto lows = [](const ComplexMatrix& h) {
    const EigenResult r = eig_complex(h);
    return select_real(r.values, {-49.999, -1e-3}, default_im_tol(50.0));
  };
  const std::vector<double> a =
      lows(build_gaussian_hamiltonian(50.0, 10.0, narrow));
  const std::vector<double> b =
      lows(build_gaussian_hamiltonian(50.0, 10.0, unit));
  REQUIRE(a.size() >= 4);
  REQUIRE(b.size() >= 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-5));
  }
}

TEST_CASE("auto-tuned scale stays inside its search interval") {
  const double s = autotune_scale(50.0, 60);
  CHECK(s >= 0.3);
  CHECK(s <= 3.0);
}

TEST_CASE("index validation") {
  CHECK_THROWS_AS(me_p2(-1, 0), ConfigError);
  CHECK_THROWS_AS(me_gauss(0, -2), ConfigError);
  BasisConfig bad;
  bad.n_basis = 1;
  CHECK_THROWS_AS(build_gaussian_hamiltonian(50, 0, bad), ConfigError);
}
