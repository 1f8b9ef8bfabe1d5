#pragma once

#include <string>
#include <vector>

namespace ptspec {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// The oracle suite: PT symmetry, Wronskian conservation, matrix elements
/// vs quadrature, Hermitian limits vs finite differences, cross-method
/// agreement, eigensolver trace moments, pencil vs determinant scan.
/// fast = true shrinks grids so the suite finishes well under a minute;
/// the full run adds the published evolution-figure reproductions
/// (exceptional points of all five scattering models).
std::vector<CheckResult> run_validation(bool fast);

/// Pretty pass/fail table; returns true iff every check passed.
bool print_validation_report(const std::vector<CheckResult>& results);

}  // namespace ptspec
