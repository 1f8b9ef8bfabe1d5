#include <doctest.h>

#include <cmath>
#include <random>

#include "ptspec/oracles.hpp"
#include "ptspec/rectwell.hpp"

using namespace ptspec;

namespace {
PotentialSpec rect_spec(double v1, double v2, double a) {
  PotentialSpec s;
  s.model = PotentialModel::kRect;
  s.v1 = v1;
  s.v2 = v2;
  s.a = a;
  return s;
}
}  // namespace

TEST_CASE("eliminant variables use principal roots with q = conj(p)") {
  const RectEliminantVars v = rect_vars(-10.0, 20.0, 3.0, 2.0);
  CHECK(v.q == std::conj(v.p));
  CHECK(v.r == doctest::Approx(2.0 * std::sqrt(10.0)).epsilon(1e-15));
  CHECK(v.p.real() > 0.0);
}

TEST_CASE("eliminant is real and finite across the scan band") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> v1d(5.0, 45.0), v2d(0.0, 9.0),
      ad(0.8, 3.0);
  for (int t = 0; t < 200; ++t) {
    const double v1 = v1d(rng), v2 = v2d(rng), a = ad(rng);
    std::uniform_real_distribution<double> ed(-v1 + 1e-6, -1e-6);
    const double d = rect_eliminant(ed(rng), v1, v2, a);  // throws on Im != 0
    CHECK(std::isfinite(d));
  }
}

TEST_CASE("eliminant rejects energies outside (-v1, 0)") {
  CHECK_THROWS_AS(rect_eliminant(0.0, 20, 3, 2), ConfigError);
  CHECK_THROWS_AS(rect_eliminant(-20.0, 20, 3, 2), ConfigError);
  CHECK_THROWS_AS(rect_spectrum(-5, 0, 2, 1e-9), InvalidSpecError);
}

TEST_CASE("v2 = 0 roots coincide with the square-well spectrum") {
  const std::vector<double> oracle =
      oracles::square_well_levels(20.0, 2.0, 1e-12);
  const SpectrumResult res = rect_spectrum(20.0, 0.0, 2.0, 1e-10);
  REQUIRE(res.eigenvalues.size() == oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    CHECK(std::abs(res.eigenvalues[i] - oracle[i]) <= 1e-8);
  }
}

TEST_CASE("v2 parity is exact") {
  for (int i = 1; i < 120; ++i) {
    const double e = -20.0 + i * (20.0 / 120.0);
    CHECK(rect_eliminant(e, 20, 5.5, 2) == rect_eliminant(e, 20, -5.5, 2));
  }
}

TEST_CASE("analytic and shooting spectra agree at (20, 3, 2)") {
  const SpectrumResult analytic = rect_spectrum(20.0, 3.0, 2.0, 1e-10);
  ShootingConfig cfg;
  const SpectrumResult shot =
      find_real_eigenvalues(rect_spec(20, 3, 2), cfg);
  REQUIRE(analytic.eigenvalues.size() == shot.eigenvalues.size());
  for (std::size_t i = 0; i < shot.eigenvalues.size(); ++i) {
    CHECK(std::abs(analytic.eigenvalues[i] - shot.eigenvalues[i]) <= 1e-6);
  }
}

TEST_CASE("method equivalence over random wells") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> v1d(5.0, 40.0), ad(0.8, 3.0),
      v2d(0.0, 0.25);
  ShootingConfig cfg;
  cfg.e_scan_points = 600;
  for (int t = 0; t < 50; ++t) {
    const double v1 = v1d(rng), a = ad(rng), v2 = v2d(rng);
    const SpectrumResult analytic = rect_spectrum(v1, v2, a, 1e-10);
    const SpectrumResult shot = find_real_eigenvalues(rect_spec(v1, v2, a), cfg);
    REQUIRE(analytic.eigenvalues.size() == shot.eigenvalues.size());
    for (std::size_t i = 0; i < shot.eigenvalues.size(); ++i) {
      CHECK(std::abs(analytic.eigenvalues[i] - shot.eigenvalues[i]) <= 1e-6);
    }
  }
}

TEST_CASE("far above every exceptional point the real spectrum is empty") {
  CHECK(rect_spectrum(20.0, 100.0, 2.0, 1e-9).eigenvalues.empty());
}
