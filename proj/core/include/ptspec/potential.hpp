#pragma once

#include <string_view>
#include <vector>

#include "ptspec/errors.hpp"
#include "ptspec/types.hpp"

namespace ptspec {

enum class PotentialModel {
  kRect,
  kScarfII,
  kGaussian,
  kQuarticLorentz,
  kSech,
  kWignerCoulomb,
};

/// A complex scattering potential V(x) = -V1*F_even(x) + i*V2*F_odd(x).
/// All models satisfy V(-x) = conj(V(x)); the half-width `a` is used only
/// by the rectangular model.
struct PotentialSpec {
  PotentialModel model = PotentialModel::kGaussian;
  double v1 = 50.0;
  double v2 = 0.0;
  double a = 2.0;
};

/// Throws InvalidSpecError unless v1 > 0 (and a > 0 for the rectangular model).
void validate_spec(const PotentialSpec& spec);

/// Complex potential value at x. The rectangular model takes the value
/// -V1 - i*V2 at x = 0 exactly (odd step +1 on [0, a)).
Complex evaluate(const PotentialSpec& spec, double x);

/// One-sided value of V(sign*t), t >= 0, with jump nodes resolved to the
/// limit from inside the traversed segment. Identical to evaluate() for the
/// smooth models; for Rect it keeps piecewise-constant integration exact.
Complex evaluate_directed(const PotentialSpec& spec, double t, int sign);

/// Interior discontinuity positions of V on (0, L); empty for smooth models.
std::vector<double> interior_breakpoints(const PotentialSpec& spec, double L);

/// Max over sampled x in (0, xmax) of |V(-x) - conj(V(x))|. Samples at
/// midpoints (i+1/2)*xmax/samples so the rectangular jump at x = 0 is never
/// hit.
double check_pt_symmetry(const PotentialSpec& spec, int samples, double xmax);

/// Lowercase CLI token for a model ("rect", "scarf2", "gaussian", "quartic",
/// "sech", "wigner-coulomb").
const char* model_token(PotentialModel m);
bool parse_model_token(std::string_view token, PotentialModel& out);

}  // namespace ptspec
