#include <doctest.h>

#include <cmath>

#include "ptspec/potential.hpp"

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

const PotentialModel kAllModels[] = {
    PotentialModel::kRect,          PotentialModel::kScarfII,
    PotentialModel::kGaussian,      PotentialModel::kQuarticLorentz,
    PotentialModel::kSech,          PotentialModel::kWignerCoulomb,
};
}  // namespace

TEST_CASE("rect value inside the well carries the odd step") {
  const PotentialSpec s = spec_of(PotentialModel::kRect, 20, 3);
  CHECK(evaluate(s, 1.0) == Complex{-20.0, -3.0});
  CHECK(evaluate(s, -1.0) == Complex{-20.0, 3.0});
  CHECK(evaluate(s, 0.0) == Complex{-20.0, -3.0});  // step is +1 at x = 0
  CHECK(evaluate(s, 2.0) == Complex{-20.0, 0.0});   // edge: well yes, step no
  CHECK(evaluate(s, 2.5) == Complex{0.0, 0.0});
}

TEST_CASE("gaussian closed form at x = 0.5") {
  const Complex v = evaluate(spec_of(PotentialModel::kGaussian, 50, 10), 0.5);
  CHECK(v.real() == doctest::Approx(-50.0 * std::exp(-0.25)).epsilon(1e-15));
  CHECK(v.imag() == doctest::Approx(5.0 * std::exp(-0.25)).epsilon(1e-15));
}

TEST_CASE("imaginary part vanishes at the origin for the smooth models") {
  for (PotentialModel m : kAllModels) {
    // rect is the exception: its odd step is pinned to +1 at x = 0
    if (m == PotentialModel::kRect) continue;
    CHECK(evaluate(spec_of(m, 20, 7), 0.0).imag() == 0.0);
  }
}

TEST_CASE("v2 = 0 makes every model purely real") {
  for (PotentialModel m : kAllModels) {
    for (int i = -30; i <= 30; ++i) {
      CHECK(evaluate(spec_of(m, 20, 0), 0.31 * i).imag() == 0.0);
    }
  }
}

TEST_CASE("PT symmetry holds pointwise for all models") {
  for (PotentialModel m : kAllModels) {
    const PotentialSpec s = spec_of(m, 35, 8, 1.7);
    for (int i = -40; i <= 40; ++i) {
      const double x = 0.17 * i + 0.05;  // avoid the rect jump exactly at 0
      const Complex lhs = evaluate(s, -x);
      const Complex rhs = std::conj(evaluate(s, x));
      CHECK(std::abs(lhs - rhs) <= 1e-13);
    }
  }
}

TEST_CASE("check_pt_symmetry sampled deviations") {
  CHECK(check_pt_symmetry(spec_of(PotentialModel::kScarfII, 50, 20), 1000,
                          10.0) <= 1e-14);
  CHECK(check_pt_symmetry(spec_of(PotentialModel::kRect, 20, 3), 1000, 5.0) ==
        0.0);
  CHECK(check_pt_symmetry(spec_of(PotentialModel::kWignerCoulomb, 20, 5), 1000,
                          30.0) <= 1e-14);
}

TEST_CASE("all models except rect decay at infinity") {
  for (PotentialModel m : kAllModels) {
    if (m == PotentialModel::kRect) continue;
    const PotentialSpec s = spec_of(m, 50, 20);
    const double far = std::abs(evaluate(s, 6.0));
    const double farther = std::abs(evaluate(s, 12.0));
    CHECK(far < 5.0);
    CHECK(farther < far);
  }
  // the Wigner-Coulomb imaginary tail decays slowest (~ v2/x)
  const double wc =
      std::abs(evaluate(spec_of(PotentialModel::kWignerCoulomb, 50, 20), 40.0)
                   .imag());
  CHECK(wc == doctest::Approx(20.0 * 40.0 / 1601.0).epsilon(1e-12));
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(validate_spec(spec_of(PotentialModel::kGaussian, -1, 0)),
                  InvalidSpecError);
  CHECK_THROWS_AS(validate_spec(spec_of(PotentialModel::kGaussian, 0, 0)),
                  InvalidSpecError);
  CHECK_THROWS_AS(validate_spec(spec_of(PotentialModel::kRect, 10, 0, -2)),
                  InvalidSpecError);
  CHECK_THROWS_AS(evaluate(spec_of(PotentialModel::kRect, 10, 0, 0), 1.0),
                  InvalidSpecError);
}

TEST_CASE("model tokens round-trip") {
  for (PotentialModel m : kAllModels) {
    PotentialModel parsed;
    REQUIRE(parse_model_token(model_token(m), parsed));
    CHECK(parsed == m);
  }
  PotentialModel out;
  CHECK_FALSE(parse_model_token("coulomb", out));
}

TEST_CASE("directed evaluation resolves the rect jumps to interior limits") {
  const PotentialSpec s = spec_of(PotentialModel::kRect, 20, 3);
  CHECK(evaluate_directed(s, 0.0, +1) == Complex{-20.0, -3.0});
  CHECK(evaluate_directed(s, 0.0, -1) == Complex{-20.0, 3.0});
  CHECK(evaluate_directed(s, 1.9, -1) == Complex{-20.0, 3.0});
  CHECK(evaluate_directed(s, 2.0, +1) == Complex{0.0, 0.0});
  CHECK(evaluate_directed(s, 3.0, -1) == Complex{0.0, 0.0});
  // smooth models agree with plain evaluation
  const PotentialSpec g = spec_of(PotentialModel::kGaussian, 50, 10);
  CHECK(evaluate_directed(g, 1.25, -1) == evaluate(g, -1.25));
  CHECK(evaluate_directed(g, 1.25, +1) == evaluate(g, 1.25));
}

TEST_CASE("rect breakpoints appear only when inside the range") {
  const PotentialSpec s = spec_of(PotentialModel::kRect, 20, 3, 2.0);
  CHECK(interior_breakpoints(s, 2.0).empty());
  const auto bp = interior_breakpoints(s, 5.0);
  REQUIRE(bp.size() == 1);
  CHECK(bp[0] == 2.0);
  CHECK(interior_breakpoints(spec_of(PotentialModel::kSech, 50, 10), 12.0)
            .empty());
}
