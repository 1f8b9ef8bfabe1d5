#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ptspec/basis.hpp"
#include "ptspec/shooting.hpp"

namespace ptspec {

enum class SweepMethod { kShooting, kAnalyticRect, kHOBasis, kWCPencil };

const char* method_token(SweepMethod m);
bool parse_method_token(std::string_view token, SweepMethod& out);

struct SweepConfig {
  double v2_min = 0.0;
  double v2_max = 0.0;
  int steps = 400;
  SweepMethod method = SweepMethod::kShooting;
  /// Max |dE| linking roots across adjacent grid points; 0 = auto
  /// (3x the typical level spacing at v2_min).
  double match_gap = 0.0;
  /// Bisection tolerance in V2 for exceptional-point refinement.
  double ep_tol_v2 = 1e-3;
  ShootingConfig shooting;
  BasisConfig basis;
  double analytic_tol = 1e-9;
  /// Optional energy band to trace (0,0 = the full well). Useful when the
  /// near-threshold region is not resolvable by the chosen method, e.g.
  /// the Wigner-Coulomb 1/x^2 tail tower in a finite oscillator basis.
  double e_window_lo = 0.0;
  double e_window_hi = 0.0;
};

/// AnalyticRect only fits Rect, WCPencil only Wigner-Coulomb, HOBasis only
/// Gaussian. Throws ConfigError otherwise; also validates ranges.
void validate_sweep_config(const PotentialSpec& spec, const SweepConfig& cfg);

struct BranchPoint {
  double v2 = 0.0;
  double energy = 0.0;
};

struct Branch {
  int label = 0;
  std::vector<BranchPoint> points;
};

/// A branch pair that lost its roots between v2_lo and v2_hi.
struct Termination {
  int label_a = 0;
  int label_b = 0;
  double v2_lo = 0.0;
  double v2_hi = 0.0;
};

struct SpectralCurves {
  std::vector<double> v2_grid;
  std::vector<Branch> branches;
  std::vector<Termination> terminations;
};

struct ExceptionalPoint {
  double v2c = 0.0;
  double e_c = 0.0;
  int branch_a = 0;
  int branch_b = 0;
  SweepMethod method = SweepMethod::kShooting;
  bool refined = true;   // false: root count changed by other than 2
  std::string note;
};

struct CrossingEvent {
  double v2_star = 0.0;
  double e_star = 0.0;
  int branch_a = 0;
  int branch_b = 0;
};

/// Single-parameter spectrum solver behind the sweep: binds (spec, method)
/// and serves full-range and windowed real spectra at any v2.
class SpectrumEngine {
 public:
  SpectrumEngine(const PotentialSpec& spec, const SweepConfig& cfg);
  ~SpectrumEngine();

  /// Full real spectrum at v2, sorted ascending.
  std::vector<double> real_spectrum(double v2) const;

  /// Like real_spectrum, but near-degenerate adjacent pairs (gap below 10x
  /// the scan spacing) are re-scanned locally with 10x density.
  std::vector<double> real_spectrum_refined(double v2) const;

  /// Real roots inside (lo, hi) at v2, scanned densely enough to separate
  /// a close pair.
  std::vector<double> roots_in_window(double v2, double lo, double hi) const;

  double scan_spacing() const;  // energy grid spacing of the base scan

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Computes the real spectrum on the v2 grid, links roots into labelled
/// branches (labels 0,1,2,... by energy order at v2_min; later births get
/// fresh labels), and records pair terminations. Near a termination the
/// v2 step is locally refined 10x before the interval is recorded.
SpectralCurves sweep(const PotentialSpec& spec, const SweepConfig& cfg);

/// Bisects each termination interval on v2 using the real-root count in
/// the pair's energy window; e_c extrapolates the pair midpoint to v2c.
std::vector<ExceptionalPoint> locate_eps(const PotentialSpec& spec,
                                         const SpectralCurves& curves,
                                         const SweepConfig& cfg);

/// Sign changes of E_i(v2) - E_j(v2) over every branch pair alive on a
/// common sub-grid. Exact-grid ties are resolved from the neighbouring
/// intervals.
std::vector<CrossingEvent> detect_crossings(const SpectralCurves& curves);

struct SweepOutcome {
  SpectralCurves curves;
  std::vector<ExceptionalPoint> eps;
  std::vector<CrossingEvent> crossings;
};

/// sweep + locate_eps + detect_crossings in one call.
SweepOutcome run_sweep_with_eps(const PotentialSpec& spec,
                                const SweepConfig& cfg);

}  // namespace ptspec
