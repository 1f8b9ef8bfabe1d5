#pragma once

#include <memory>
#include <vector>

#include "ptspec/potential.hpp"

namespace ptspec {

/// Shooting/matching solver parameters. L = 0 picks the model default:
/// a for Rect, 12 for the exponentially decaying models, 30 for
/// Wigner-Coulomb (whose imaginary tail decays only as 1/|x|).
struct ShootingConfig {
  double L = 0.0;
  double step = 1e-3;
  int e_scan_points = 2000;
  double root_tol = 1e-9;
  double residual_tol = 1e-6;
};

double default_matching_distance(PotentialModel model, double a);

/// Copy of cfg with L resolved to the model default when unset.
ShootingConfig resolve_shooting_config(const PotentialSpec& spec,
                                       ShootingConfig cfg);

void validate_shooting_config(const ShootingConfig& cfg);

/// Fundamental solutions u, v of psi'' = (V - E) psi with u(0)=1, u'(0)=0,
/// v(0)=0, v'(0)=1, integrated to +L and -L.
///
/// The Wronskian u v' - u' v is 1 for the exact flow. In doubles it is
/// verifiable only while the solutions stay below ~1e6 in magnitude; past
/// that the cross products cancel catastrophically. Each side therefore
/// reports the defect at the last position where the check is meaningful
/// (== +-L whenever growth stayed bounded, e.g. the rectangular well).
struct ShootingState {
  Complex u_plus, du_plus, v_plus, dv_plus;
  Complex u_minus, du_minus, v_minus, dv_minus;
  double wronskian_err_plus = 0.0;
  double wronskian_err_minus = 0.0;
  double wronskian_x_plus = 0.0;
  double wronskian_x_minus = 0.0;
};

/// Matching condition at energy E < 0, k = sqrt(-E):
///   z = k u(L) + u'(L),   w  = k v(L) + v'(L),
///   zm = k u(-L) - u'(-L), wm = k v(-L) - v'(-L),
///   f = z*wm - w*zm,       g = Re(z * conj(w)).
/// PT symmetry gives u(-x) = conj(u(x)), v(-x) = -conj(v(x)), hence
/// f = -2g on real E; g is the real function scanned for sign changes and
/// |f|/scale the residual filter.
struct Mismatch {
  Complex f;
  double g = 0.0;
  double scale = 0.0;  // |z| * |w|
};

ShootingState integrate_fundamental(const PotentialSpec& spec, double E,
                                    const ShootingConfig& cfg);

Mismatch mismatch(const PotentialSpec& spec, double E,
                  const ShootingConfig& cfg);

/// Real eigenvalues plus diagnostics. residuals[i] is |f| at the accepted
/// root relative to the |z||w| scale of its scan bracket (the pointwise
/// scale degenerates with |f| in the Hermitian limit); skipped_energies
/// lists scan grid points where the integration overflowed.
struct SpectrumResult {
  std::vector<double> eigenvalues;
  std::vector<double> residuals;
  std::vector<double> skipped_energies;
};

/// Scans g(E) on a uniform grid over (-v1 + eps, -eps), eps = root_tol,
/// brackets sign changes, bisects to root_tol and filters on the |f|
/// residual. Eigenvalues come back sorted ascending.
SpectrumResult find_real_eigenvalues(const PotentialSpec& spec,
                                     const ShootingConfig& cfg);

/// Same scan restricted to (e_lo, e_hi) with `points` grid nodes.
SpectrumResult find_real_eigenvalues_in_window(const PotentialSpec& spec,
                                               const ShootingConfig& cfg,
                                               double e_lo, double e_hi,
                                               int points);

/// Precomputed integration tables for one (spec, cfg); evaluating the
/// mismatch at an energy is then pure arithmetic. Reused across a scan.
class ShootingWorkspace {
 public:
  ShootingWorkspace(const PotentialSpec& spec, const ShootingConfig& cfg);
  ~ShootingWorkspace();
  ShootingWorkspace(ShootingWorkspace&&) noexcept;
  ShootingWorkspace& operator=(ShootingWorkspace&&) noexcept;

  ShootingState integrate(double E) const;  // throws OverflowError
  Mismatch mismatch(double E) const;        // requires -v1 < E < 0

  const PotentialSpec& spec() const;
  const ShootingConfig& config() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ptspec
