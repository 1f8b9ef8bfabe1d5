#include "ptspec/potential.hpp"

#include <cmath>

namespace ptspec {

void validate_spec(const PotentialSpec& spec) {
  switch (spec.model) {
    case PotentialModel::kRect:
    case PotentialModel::kScarfII:
    case PotentialModel::kGaussian:
    case PotentialModel::kQuarticLorentz:
    case PotentialModel::kSech:
    case PotentialModel::kWignerCoulomb:
      break;
    default:
      throw InvalidSpecError("unknown potential model");
  }
  if (!(spec.v1 > 0.0) || !std::isfinite(spec.v1)) {
    throw InvalidSpecError("well depth v1 must be positive and finite");
  }
  if (!std::isfinite(spec.v2)) {
    throw InvalidSpecError("imaginary strength v2 must be finite");
  }
  if (spec.model == PotentialModel::kRect &&
      (!(spec.a > 0.0) || !std::isfinite(spec.a))) {
    throw InvalidSpecError("rect half-width a must be positive and finite");
  }
}

namespace {

inline Complex rect_value(const PotentialSpec& s, double x) {
  const double ax = std::abs(x);
  if (ax > s.a) return {0.0, 0.0};
  // odd step: +1 on [0, a), -1 on (-a, 0), 0 outside the well
  double theta2 = 0.0;
  if (ax < s.a) theta2 = (x >= 0.0) ? 1.0 : -1.0;
  return {-s.v1, -s.v2 * theta2};
}

}  // namespace

Complex evaluate(const PotentialSpec& spec, double x) {
  validate_spec(spec);
  switch (spec.model) {
    case PotentialModel::kRect:
      return rect_value(spec, x);
    case PotentialModel::kScarfII: {
      const double s = 1.0 / std::cosh(x);
      const double t = std::tanh(x);
      return {-spec.v1 * s * s, spec.v2 * s * t};
    }
    case PotentialModel::kGaussian: {
      const double g = std::exp(-x * x);
      return {-spec.v1 * g, spec.v2 * x * g};
    }
    case PotentialModel::kQuarticLorentz: {
      const double d = 1.0 + x * x * x * x;
      return {-spec.v1 / d, spec.v2 * x / d};
    }
    case PotentialModel::kSech: {
      const double s = 1.0 / std::cosh(x);
      const double t = std::tanh(x);
      return {-spec.v1 * s, spec.v2 * s * t};
    }
    case PotentialModel::kWignerCoulomb: {
      const double d = 1.0 + x * x;
      return {-spec.v1 / d, spec.v2 * x / d};
    }
  }
  throw InvalidSpecError("unknown potential model");
}

Complex evaluate_directed(const PotentialSpec& spec, double t, int sign) {
  if (spec.model != PotentialModel::kRect) {
    return evaluate(spec, sign >= 0 ? t : -t);
  }
  // piecewise constant: inside the well the odd part carries the sign of x
  validate_spec(spec);
  if (t >= spec.a) return {0.0, 0.0};
  return {-spec.v1, sign >= 0 ? -spec.v2 : spec.v2};
}

std::vector<double> interior_breakpoints(const PotentialSpec& spec, double L) {
  std::vector<double> bp;
  if (spec.model == PotentialModel::kRect && spec.a < L) bp.push_back(spec.a);
  return bp;
}

double check_pt_symmetry(const PotentialSpec& spec, int samples, double xmax) {
  validate_spec(spec);
  if (samples < 2) throw InvalidSpecError("need at least 2 samples");
  if (!(xmax > 0.0)) throw InvalidSpecError("xmax must be positive");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = (i + 0.5) * xmax / samples;
    const Complex left = evaluate(spec, -x);
    const Complex right = std::conj(evaluate(spec, x));
    worst = std::max(worst, std::abs(left - right));
  }
  return worst;
}

const char* model_token(PotentialModel m) {
  switch (m) {
    case PotentialModel::kRect: return "rect";
    case PotentialModel::kScarfII: return "scarf2";
    case PotentialModel::kGaussian: return "gaussian";
    case PotentialModel::kQuarticLorentz: return "quartic";
    case PotentialModel::kSech: return "sech";
    case PotentialModel::kWignerCoulomb: return "wigner-coulomb";
  }
  return "?";
}

bool parse_model_token(std::string_view token, PotentialModel& out) {
  if (token == "rect") out = PotentialModel::kRect;
  else if (token == "scarf2") out = PotentialModel::kScarfII;
  else if (token == "gaussian") out = PotentialModel::kGaussian;
  else if (token == "quartic") out = PotentialModel::kQuarticLorentz;
  else if (token == "sech") out = PotentialModel::kSech;
  else if (token == "wigner-coulomb") out = PotentialModel::kWignerCoulomb;
  else return false;
  return true;
}

}  // namespace ptspec
