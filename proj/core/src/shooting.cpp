#include "ptspec/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "ptspec/parallel.hpp"

namespace ptspec {

double default_matching_distance(PotentialModel model, double a) {
  switch (model) {
    case PotentialModel::kRect:
      return a;
    case PotentialModel::kWignerCoulomb:
      return 30.0;  // 1/|x| imaginary tail converges slowly
    default:
      return 12.0;
  }
}

ShootingConfig resolve_shooting_config(const PotentialSpec& spec,
                                       ShootingConfig cfg) {
  if (cfg.L <= 0.0) cfg.L = default_matching_distance(spec.model, spec.a);
  return cfg;
}

void validate_shooting_config(const ShootingConfig& cfg) {
  if (!(cfg.L > 0.0) || !std::isfinite(cfg.L)) {
    throw ConfigError("matching distance L must be positive");
  }
  if (!(cfg.step > 0.0) || cfg.step > cfg.L) {
    throw ConfigError("need 0 < step <= L");
  }
  if (cfg.e_scan_points < 2) throw ConfigError("e_scan_points must be >= 2");
  if (!(cfg.root_tol > 0.0)) throw ConfigError("root_tol must be positive");
  if (!(cfg.residual_tol > 0.0)) {
    throw ConfigError("residual_tol must be positive");
  }
}

namespace {

constexpr double kWronskianMagLimit = 100.0;  // |.|_1 bound for a meaningful check
constexpr int kWronskianStride = 8;

struct Segment {
  double t0 = 0.0;
  double t1 = 0.0;
  int steps = 0;
  double h = 0.0;
  std::vector<Complex> v_half;  // potential at t0 + s*h/2, s = 0..2*steps
};

inline double mag1(const Complex& z) {
  return std::abs(z.real()) + std::abs(z.imag());
}

struct SideResult {
  Complex u, du, v, dv;
  double wr_err = 0.0;
  double wr_x = 0.0;
};

// One RK4 step of psi'' = q psi for both fundamental solutions; the stage
// potentials are shared.
inline void rk4_step(const Complex& q0, const Complex& qm, const Complex& q1,
                     double h, Complex& u, Complex& du, Complex& v,
                     Complex& dv) {
  const double h2 = 0.5 * h;
  const double h6 = h / 6.0;

  Complex k1 = du, l1 = q0 * u;
  Complex k2 = du + h2 * l1, l2 = qm * (u + h2 * k1);
  Complex k3 = du + h2 * l2, l3 = qm * (u + h2 * k2);
  Complex k4 = du + h * l3, l4 = q1 * (u + h * k3);
  u += h6 * (k1 + 2.0 * (k2 + k3) + k4);
  du += h6 * (l1 + 2.0 * (l2 + l3) + l4);

  k1 = dv; l1 = q0 * v;
  k2 = dv + h2 * l1; l2 = qm * (v + h2 * k1);
  k3 = dv + h2 * l2; l3 = qm * (v + h2 * k2);
  k4 = dv + h * l3; l4 = q1 * (v + h * k3);
  v += h6 * (k1 + 2.0 * (k2 + k3) + k4);
  dv += h6 * (l1 + 2.0 * (l2 + l3) + l4);
}

SideResult integrate_side(const std::vector<Segment>& segs, double E) {
  SideResult r;
  r.u = {1.0, 0.0};
  r.du = {0.0, 0.0};
  r.v = {0.0, 0.0};
  r.dv = {1.0, 0.0};
  bool wr_active = true;

  auto wronskian_probe = [&](double t) {
    if (!wr_active) return;
    const double mag =
        std::max(std::max(mag1(r.u), mag1(r.du)), std::max(mag1(r.v), mag1(r.dv)));
    if (mag > kWronskianMagLimit) {
      wr_active = false;
      return;
    }
    const Complex w = r.u * r.dv - r.du * r.v;
    r.wr_err = std::max(r.wr_err, std::abs(w - Complex{1.0, 0.0}));
    r.wr_x = t;
  };

  for (const Segment& seg : segs) {
    const Complex* vh = seg.v_half.data();
    for (int j = 0; j < seg.steps; ++j) {
      const Complex q0 = vh[2 * j] - E;
      const Complex qm = vh[2 * j + 1] - E;
      const Complex q1 = vh[2 * j + 2] - E;
      rk4_step(q0, qm, q1, seg.h, r.u, r.du, r.v, r.dv);
      if (wr_active && (j % kWronskianStride == kWronskianStride - 1)) {
        wronskian_probe(seg.t0 + (j + 1) * seg.h);
      }
    }
    wronskian_probe(seg.t1);
    const double m =
        std::max(std::max(mag1(r.u), mag1(r.du)), std::max(mag1(r.v), mag1(r.dv)));
    if (!std::isfinite(m)) {
      throw OverflowError("non-finite solution during integration");
    }
  }
  return r;
}

}  // namespace

struct ShootingWorkspace::Impl {
  PotentialSpec spec;
  ShootingConfig cfg;
  std::vector<Segment> right;  // x = +t
  std::vector<Segment> left;   // x = -t

  Impl(const PotentialSpec& s, const ShootingConfig& c) : spec(s), cfg(c) {
    validate_spec(spec);
    cfg = resolve_shooting_config(spec, cfg);
    validate_shooting_config(cfg);
    right = build_side(+1);
    left = build_side(-1);
  }

  std::vector<Segment> build_side(int sign) const {
    std::vector<double> nodes{0.0};
    for (double b : interior_breakpoints(spec, cfg.L)) nodes.push_back(b);
    nodes.push_back(cfg.L);

    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      Segment seg;
      seg.t0 = nodes[i];
      seg.t1 = nodes[i + 1];
      const double len = seg.t1 - seg.t0;
      seg.steps = std::max(1, static_cast<int>(std::ceil(len / cfg.step - 1e-12)));
      seg.h = len / seg.steps;
      seg.v_half.resize(2 * seg.steps + 1);
      if (spec.model == PotentialModel::kRect) {
        // constant per segment; sample the midpoint so node values never
        // leak across the jump
        const Complex c =
            evaluate_directed(spec, 0.5 * (seg.t0 + seg.t1), sign);
        std::fill(seg.v_half.begin(), seg.v_half.end(), c);
      } else {
        for (int s = 0; s <= 2 * seg.steps; ++s) {
          seg.v_half[s] =
              evaluate_directed(spec, seg.t0 + 0.5 * s * seg.h, sign);
        }
      }
      segs.push_back(std::move(seg));
    }
    return segs;
  }

  ShootingState integrate(double E) const {
    if (!std::isfinite(E)) throw ConfigError("energy must be finite");
    const SideResult plus = integrate_side(right, E);
    const SideResult minus = integrate_side(left, E);
    ShootingState st;
    st.u_plus = plus.u;
    st.du_plus = plus.du;
    st.v_plus = plus.v;
    st.dv_plus = plus.dv;
    // the left sweep runs in t = -x, so x-derivatives flip sign
    st.u_minus = minus.u;
    st.du_minus = -minus.du;
    st.v_minus = -minus.v;  // v is odd in its initial data: v(0)=0, v'(0)=1
    st.dv_minus = minus.dv;
    st.wronskian_err_plus = plus.wr_err;
    st.wronskian_x_plus = plus.wr_x;
    st.wronskian_err_minus = minus.wr_err;
    st.wronskian_x_minus = -minus.wr_x;
    return st;
  }

  Mismatch mismatch(double E) const {
    if (!(E > -spec.v1 && E < 0.0)) {
      throw ConfigError("mismatch requires -v1 < E < 0");
    }
    const ShootingState st = integrate(E);
    const double k = std::sqrt(-E);
    const Complex z = k * st.u_plus + st.du_plus;
    const Complex w = k * st.v_plus + st.dv_plus;
    const Complex zm = k * st.u_minus - st.du_minus;
    const Complex wm = k * st.v_minus - st.dv_minus;
    Mismatch m;
    m.f = z * wm - w * zm;
    m.g = z.real() * w.real() + z.imag() * w.imag();  // Re(z * conj(w))
    m.scale = std::abs(z) * std::abs(w);
    return m;
  }
};

ShootingWorkspace::ShootingWorkspace(const PotentialSpec& spec,
                                     const ShootingConfig& cfg)
    : impl_(std::make_unique<Impl>(spec, cfg)) {}
ShootingWorkspace::~ShootingWorkspace() = default;
ShootingWorkspace::ShootingWorkspace(ShootingWorkspace&&) noexcept = default;
ShootingWorkspace& ShootingWorkspace::operator=(ShootingWorkspace&&) noexcept =
    default;

ShootingState ShootingWorkspace::integrate(double E) const {
  return impl_->integrate(E);
}
Mismatch ShootingWorkspace::mismatch(double E) const {
  return impl_->mismatch(E);
}
const PotentialSpec& ShootingWorkspace::spec() const { return impl_->spec; }
const ShootingConfig& ShootingWorkspace::config() const { return impl_->cfg; }

ShootingState integrate_fundamental(const PotentialSpec& spec, double E,
                                    const ShootingConfig& cfg) {
  return ShootingWorkspace(spec, cfg).integrate(E);
}

Mismatch mismatch(const PotentialSpec& spec, double E,
                  const ShootingConfig& cfg) {
  return ShootingWorkspace(spec, cfg).mismatch(E);
}

namespace {

// g(E) with NaN marking integration overflow.
double g_or_nan(const ShootingWorkspace& ws, double E) {
  try {
    return ws.mismatch(E).g;
  } catch (const OverflowError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

struct RefinedRoot {
  double energy = 0.0;
  double residual = 0.0;
};

// |f| is normalised by the |z||w| scale at the bracket endpoints, not at
// the refined root itself: in the Hermitian limit a root means z -> 0 (or
// w -> 0), where |f| and the pointwise |z||w| vanish together and their
// ratio stays pinned at 2 no matter how good the root is. Against the
// bracket scale a genuine root refines to ~0 while a jump the bisection
// merely straddles keeps an O(1) residual.
std::optional<RefinedRoot> bisect_root(const ShootingWorkspace& ws, double lo,
                                       double hi, double g_lo,
                                       double bracket_scale,
                                       const ShootingConfig& cfg,
                                       std::vector<double>& skipped) {
  const bool neg_lo = g_lo < 0.0;
  while (hi - lo > cfg.root_tol) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g_or_nan(ws, mid);
    if (std::isnan(gm)) {
      skipped.push_back(mid);
      return std::nullopt;
    }
    if (gm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((gm < 0.0) == neg_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // the interval is converged; keep halving a little longer where the root
  // function is steep (near threshold dk/dE blows up) so the |f| residual
  // reflects the root, not the stopping tolerance
  RefinedRoot root;
  for (int extra = 0; extra < 64; ++extra) {
    root.energy = 0.5 * (lo + hi);
    const Mismatch m = ws.mismatch(root.energy);
    root.residual = std::abs(m.f) / (bracket_scale + 1e-300);
    if (root.residual <= 0.25 * cfg.residual_tol || lo == hi) break;
    if (m.g == 0.0) break;
    if (root.energy == lo || root.energy == hi) break;
    if ((m.g < 0.0) == neg_lo) {
      lo = root.energy;
    } else {
      hi = root.energy;
    }
  }
  return root;
}

SpectrumResult scan_real_eigenvalues(const ShootingWorkspace& ws, double e_lo,
                                     double e_hi, int points) {
  const ShootingConfig& cfg = ws.config();
  SpectrumResult out;
  if (!(e_lo < e_hi) || points < 2) return out;

  std::vector<double> grid(points);
  std::vector<double> g(points);
  std::vector<double> scale(points);
  const double de = (e_hi - e_lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = e_lo + i * de;

  parallel_for(points, [&](std::size_t i) {
    try {
      const Mismatch m = ws.mismatch(grid[i]);
      g[i] = m.g;
      scale[i] = m.scale;
    } catch (const OverflowError&) {
      g[i] = std::numeric_limits<double>::quiet_NaN();
      scale[i] = 0.0;
    }
  });

  for (int i = 0; i < points; ++i) {
    if (std::isnan(g[i])) out.skipped_energies.push_back(grid[i]);
  }

  std::vector<RefinedRoot> roots;
  auto push_grid_zero = [&](int i) {
    const Mismatch m = ws.mismatch(grid[i]);
    const double s = std::max(
        {scale[std::max(0, i - 1)], scale[std::min(points - 1, i + 1)],
         m.scale});
    roots.push_back({grid[i], std::abs(m.f) / (s + 1e-300)});
  };
  for (int i = 0; i + 1 < points; ++i) {
    if (std::isnan(g[i]) || std::isnan(g[i + 1])) continue;
    if (g[i] == 0.0) {
      push_grid_zero(i);
      continue;
    }
    if (g[i] * g[i + 1] < 0.0) {
      auto root = bisect_root(ws, grid[i], grid[i + 1], g[i],
                              std::max(scale[i], scale[i + 1]), cfg,
                              out.skipped_energies);
      if (root) roots.push_back(*root);
    }
  }
  if (points >= 2 && !std::isnan(g[points - 1]) && g[points - 1] == 0.0) {
    push_grid_zero(points - 1);
  }

  std::sort(roots.begin(), roots.end(),
            [](const RefinedRoot& a, const RefinedRoot& b) {
              return a.energy < b.energy;
            });
  for (const RefinedRoot& r : roots) {
    if (!out.eigenvalues.empty() &&
        r.energy - out.eigenvalues.back() < 2.0 * cfg.root_tol) {
      continue;  // duplicate from adjacent brackets
    }
    if (r.residual <= cfg.residual_tol) {
      out.eigenvalues.push_back(r.energy);
      out.residuals.push_back(r.residual);
    }
  }
  return out;
}

}  // namespace

SpectrumResult find_real_eigenvalues(const PotentialSpec& spec,
                                     const ShootingConfig& cfg) {
  const ShootingWorkspace ws(spec, cfg);
  const double eps = ws.config().root_tol;
  return scan_real_eigenvalues(ws, -spec.v1 + eps, -eps,
                               ws.config().e_scan_points);
}

SpectrumResult find_real_eigenvalues_in_window(const PotentialSpec& spec,
                                               const ShootingConfig& cfg,
                                               double e_lo, double e_hi,
                                               int points) {
  const ShootingWorkspace ws(spec, cfg);
  const double eps = ws.config().root_tol;
  e_lo = std::max(e_lo, -spec.v1 + eps);
  e_hi = std::min(e_hi, -eps);
  return scan_real_eigenvalues(ws, e_lo, e_hi, points);
}

}  // namespace ptspec
