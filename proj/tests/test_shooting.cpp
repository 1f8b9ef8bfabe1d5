#include <doctest.h>

#include <cmath>

#include "ptspec/oracles.hpp"
#include "ptspec/shooting.hpp"

using namespace ptspec;

namespace {
PotentialSpec spec_of(PotentialModel m, double v1, double v2, double a = 2.0) {
  PotentialSpec s;
  s.model = m;
  s.v1 = v1;
  s.v2 = v2;
  s.a = a;
  return s;
}
}  // namespace

TEST_CASE("config defaults resolve per model") {
  CHECK(default_matching_distance(PotentialModel::kRect, 1.7) == 1.7);
  CHECK(default_matching_distance(PotentialModel::kGaussian, 2) == 12.0);
  CHECK(default_matching_distance(PotentialModel::kWignerCoulomb, 2) == 30.0);
  ShootingConfig bad;
  bad.L = 1.0;
  bad.step = 2.0;
  CHECK_THROWS_AS(validate_shooting_config(bad), ConfigError);
  bad = ShootingConfig{};
  bad.e_scan_points = 1;
  bad.L = 5;
  CHECK_THROWS_AS(validate_shooting_config(bad), ConfigError);
}

TEST_CASE("free limit reproduces cosh/sinh at E = -1") {
  // a vanishingly shallow well is numerically the free equation
  const PotentialSpec s = spec_of(PotentialModel::kGaussian, 1e-300, 0);
  ShootingConfig cfg;
  cfg.L = 12.0;
  const ShootingState st = integrate_fundamental(s, -1.0, cfg);
  CHECK(st.u_plus.real() == doctest::Approx(std::cosh(12.0)).epsilon(1e-10));
  CHECK(st.v_plus.real() == doctest::Approx(std::sinh(12.0)).epsilon(1e-10));
  CHECK(st.du_plus.real() == doctest::Approx(std::sinh(12.0)).epsilon(1e-10));
  CHECK(st.u_minus.real() == doctest::Approx(std::cosh(12.0)).epsilon(1e-10));
  CHECK(st.v_minus.real() == doctest::Approx(-std::sinh(12.0)).epsilon(1e-10));
  CHECK(st.dv_minus.real() == doctest::Approx(std::cosh(12.0)).epsilon(1e-10));
  CHECK(st.u_plus.imag() == 0.0);
}

TEST_CASE("even potential gives even u and odd v exactly") {
  const PotentialSpec s = spec_of(PotentialModel::kGaussian, 50, 0);
  ShootingConfig cfg;
  cfg.L = 8.0;
  cfg.step = 1e-3;
  const ShootingState st = integrate_fundamental(s, -20.0, cfg);
  // identical real tables on both sides make this equality bitwise
  CHECK(st.u_minus == st.u_plus);
  CHECK(st.du_minus == -st.du_plus);
  CHECK(st.v_minus == -st.v_plus);
  CHECK(st.dv_minus == st.dv_plus);
}

TEST_CASE("wronskian stays conserved where it is measurable") {
  // rect: bounded oscillatory solutions, the check runs all the way to +-L
  {
    const PotentialSpec s = spec_of(PotentialModel::kRect, 40, 3);
    ShootingConfig cfg;
    const ShootingWorkspace ws(s, cfg);
    for (double e : {-39.0, -25.0, -10.0, -1.0}) {
      const ShootingState st = ws.integrate(e);
      CHECK(st.wronskian_x_plus == 2.0);
      CHECK(st.wronskian_x_minus == -2.0);
      CHECK(st.wronskian_err_plus <= 1e-8);
      CHECK(st.wronskian_err_minus <= 1e-8);
    }
  }
  // deep gaussian: solutions grow to ~1e30 by x = 12 where the cross
  // products cancel catastrophically, so the probe reports the defect at
  // the last position where the check is meaningful
  {
    const PotentialSpec s = spec_of(PotentialModel::kGaussian, 50, 0);
    ShootingConfig cfg;
    cfg.step = 1e-3;
    const ShootingState st = integrate_fundamental(s, -45.0, cfg);
    CHECK(st.wronskian_err_plus <= 1e-8);
    CHECK(st.wronskian_err_minus <= 1e-8);
    CHECK(st.wronskian_x_plus > 0.0);
    CHECK(st.wronskian_x_plus <= 12.0);
  }
  for (PotentialModel m :
       {PotentialModel::kScarfII, PotentialModel::kQuarticLorentz,
        PotentialModel::kSech, PotentialModel::kWignerCoulomb}) {
    const double v1 = (m == PotentialModel::kWignerCoulomb) ? 20.0 : 50.0;
    const PotentialSpec s = spec_of(m, v1, 5);
    ShootingConfig cfg;
    const ShootingWorkspace ws(s, cfg);
    for (double frac : {0.85, 0.45, 0.1}) {
      const ShootingState st = ws.integrate(-frac * v1);
      CHECK(st.wronskian_err_plus <= 1e-8);
      CHECK(st.wronskian_err_minus <= 1e-8);
    }
  }
}

TEST_CASE("mismatch enforces the bound-state energy window") {
  const PotentialSpec s = spec_of(PotentialModel::kRect, 20, 3);
  ShootingConfig cfg;
  const ShootingWorkspace ws(s, cfg);
  CHECK_THROWS_AS(ws.mismatch(0.5), ConfigError);
  CHECK_THROWS_AS(ws.mismatch(-25.0), ConfigError);
}

TEST_CASE("PT reduction: f equals -2g up to rounding") {
  const PotentialSpec s = spec_of(PotentialModel::kRect, 20, 3);
  ShootingConfig cfg;
  const ShootingWorkspace ws(s, cfg);
  for (double e : {-18.0, -12.5, -7.0, -2.5, -0.5}) {
    const Mismatch m = ws.mismatch(e);
    CHECK(std::abs(m.f + 2.0 * m.g) <= 1e-12 * std::max(1.0, m.scale));
  }
}

TEST_CASE("g changes sign across every square-well level") {
  const PotentialSpec s = spec_of(PotentialModel::kRect, 20, 0);
  ShootingConfig cfg;
  const ShootingWorkspace ws(s, cfg);
  const std::vector<double> oracle = oracles::square_well_levels(20, 2, 1e-12);
  REQUIRE(oracle.size() == 6);
  for (double e : oracle) {
    const double below = ws.mismatch(e - 1e-4).g;
    const double above = ws.mismatch(e + 1e-4).g;
    CHECK(below * above < 0.0);
  }
}

TEST_CASE("rect spectrum matches the transcendental oracle") {
  const SpectrumResult res =
      find_real_eigenvalues(spec_of(PotentialModel::kRect, 20, 0),
                            ShootingConfig{});
  const std::vector<double> oracle = oracles::square_well_levels(20, 2, 1e-12);
  REQUIRE(res.eigenvalues.size() == oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    CHECK(std::abs(res.eigenvalues[i] - oracle[i]) <= 1e-6);
    CHECK(res.residuals[i] <= 1e-6);
  }
  CHECK(res.skipped_energies.empty());
}

TEST_CASE("gaussian well at v1 = 50 holds at least six levels") {
  ShootingConfig cfg;
  cfg.L = 10.0;
  cfg.step = 2e-3;
  cfg.e_scan_points = 1500;
  const SpectrumResult res =
      find_real_eigenvalues(spec_of(PotentialModel::kGaussian, 50, 0), cfg);
  CHECK(res.eigenvalues.size() >= 6);
}

TEST_CASE("gaussian spectrum above the last exceptional point is empty") {
  ShootingConfig cfg;
  cfg.L = 10.0;
  cfg.step = 2e-3;
  cfg.e_scan_points = 1200;
  const SpectrumResult res =
      find_real_eigenvalues(spec_of(PotentialModel::kGaussian, 50, 70), cfg);
  CHECK(res.eigenvalues.empty());
}

TEST_CASE("spectra are even in v2") {
  ShootingConfig cfg;
  cfg.L = 10.0;
  cfg.step = 2e-3;
  cfg.e_scan_points = 900;
  const SpectrumResult plus =
      find_real_eigenvalues(spec_of(PotentialModel::kGaussian, 50, 10), cfg);
  const SpectrumResult minus =
      find_real_eigenvalues(spec_of(PotentialModel::kGaussian, 50, -10), cfg);
  REQUIRE(plus.eigenvalues.size() == minus.eigenvalues.size());
  for (std::size_t i = 0; i < plus.eigenvalues.size(); ++i) {
    CHECK(plus.eigenvalues[i] == minus.eigenvalues[i]);  // conj-equivariant
  }
}

TEST_CASE("hermitian limit agrees with the finite-difference oracle") {
  ShootingConfig cfg;
  const SpectrumResult res =
      find_real_eigenvalues(spec_of(PotentialModel::kGaussian, 50, 0), cfg);
  const PotentialSpec s = spec_of(PotentialModel::kGaussian, 50, 0);
  const std::vector<double> fd = oracles::finite_difference_levels(
      [&](double x) { return evaluate(s, x).real(); }, 12.0, 20000, -50.0,
      -1e-6, 1e-11);
  REQUIRE(res.eigenvalues.size() == fd.size());
  for (std::size_t i = 0; i < fd.size(); ++i) {
    CHECK(std::abs(res.eigenvalues[i] - fd[i]) <=
          1e-4 * std::abs(fd[i]));
  }
}

TEST_CASE("doubling the scan density never removes an eigenvalue") {
  const PotentialSpec s = spec_of(PotentialModel::kRect, 20, 3);
  ShootingConfig coarse;
  coarse.e_scan_points = 700;
  ShootingConfig fine = coarse;
  fine.e_scan_points = 1400;
  const SpectrumResult a = find_real_eigenvalues(s, coarse);
  const SpectrumResult b = find_real_eigenvalues(s, fine);
  for (double e : a.eigenvalues) {
    bool found = false;
    for (double f : b.eigenvalues) {
      if (std::abs(e - f) <= 1e-7) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("integration overflow is reported, scans skip and continue") {
  const PotentialSpec s = spec_of(PotentialModel::kGaussian, 1e4, 0);
  ShootingConfig cfg;
  cfg.L = 12.0;
  cfg.step = 1e-2;
  CHECK_THROWS_AS(integrate_fundamental(s, -9000.0, cfg), OverflowError);
  cfg.e_scan_points = 40;
  const SpectrumResult res = find_real_eigenvalues(s, cfg);
  CHECK(!res.skipped_energies.empty());
}
