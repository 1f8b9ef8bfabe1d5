#include "ptspec/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "ptspec/eig.hpp"
#include "ptspec/parallel.hpp"
#include "ptspec/rectwell.hpp"

namespace ptspec {

const char* method_token(SweepMethod m) {
  switch (m) {
    case SweepMethod::kShooting: return "shooting";
    case SweepMethod::kAnalyticRect: return "analytic";
    case SweepMethod::kHOBasis: return "ho-basis";
    case SweepMethod::kWCPencil: return "wc-pencil";
  }
  return "?";
}

bool parse_method_token(std::string_view token, SweepMethod& out) {
  if (token == "shooting") out = SweepMethod::kShooting;
  else if (token == "analytic") out = SweepMethod::kAnalyticRect;
  else if (token == "ho-basis") out = SweepMethod::kHOBasis;
  else if (token == "wc-pencil") out = SweepMethod::kWCPencil;
  else return false;
  return true;
}

void validate_sweep_config(const PotentialSpec& spec, const SweepConfig& cfg) {
  validate_spec(spec);
  if (!(cfg.v2_min <= cfg.v2_max)) throw ConfigError("need v2_min <= v2_max");
  if (cfg.steps < 2) throw ConfigError("steps must be >= 2");
  if (!(cfg.ep_tol_v2 > 0.0)) throw ConfigError("ep_tol_v2 must be positive");
  switch (cfg.method) {
    case SweepMethod::kAnalyticRect:
      if (spec.model != PotentialModel::kRect) {
        throw ConfigError("analytic method applies to the rect model only");
      }
      break;
    case SweepMethod::kHOBasis:
      if (spec.model != PotentialModel::kGaussian) {
        throw ConfigError("ho-basis method applies to the gaussian model only");
      }
      break;
    case SweepMethod::kWCPencil:
      if (spec.model != PotentialModel::kWignerCoulomb) {
        throw ConfigError(
            "wc-pencil method applies to the wigner-coulomb model only");
      }
      break;
    case SweepMethod::kShooting:
      break;
  }
}

namespace {

std::vector<double> scan_function_roots(const std::function<double(double)>& f,
                                        double lo, double hi, int points,
                                        double tol) {
  std::vector<double> roots;
  if (!(lo < hi) || points < 2) return roots;
  const double dx = (hi - lo) / (points - 1);
  double prev = f(lo);
  for (int i = 1; i < points; ++i) {
    const double x = lo + i * dx;
    const double cur = f(x);
    if (prev == 0.0) {
      roots.push_back(x - dx);
    } else if (prev * cur < 0.0) {
      double xa = x - dx, xb = x;
      const bool neg = prev < 0.0;
      while (xb - xa > tol) {
        const double mid = 0.5 * (xa + xb);
        const double fm = f(mid);
        if (fm == 0.0) {
          xa = xb = mid;
          break;
        }
        if ((fm < 0.0) == neg) {
          xa = mid;
        } else {
          xb = mid;
        }
      }
      roots.push_back(0.5 * (xa + xb));
    }
    prev = cur;
  }
  if (prev == 0.0) roots.push_back(hi);
  return roots;
}

}  // namespace

struct SpectrumEngine::Impl {
  PotentialSpec spec;
  SweepConfig cfg;
  double e_lo = 0.0;
  double e_hi = 0.0;
  double spacing = 0.0;
  int base_points = 2000;
  double im_tol = 0.0;

  // v2-independent matrix parts
  ComplexMatrix ho_base;   // p^2 - v1 <exp(-x^2)>
  RealMatrix ho_xg;        // <x exp(-x^2)>; enters as i*v2*ho_xg
  ComplexMatrix wc_a0;     // pencil A at v2 = 0
  RealMatrix wc_x;         // enters as i*v2*scale*wc_x
  RealMatrix wc_b;

  Impl(const PotentialSpec& s, const SweepConfig& c) : spec(s), cfg(c) {
    validate_sweep_config(spec, cfg);
    switch (cfg.method) {
      case SweepMethod::kShooting: {
        cfg.shooting = resolve_shooting_config(spec, cfg.shooting);
        validate_shooting_config(cfg.shooting);
        const double eps = cfg.shooting.root_tol;
        e_lo = -spec.v1 + eps;
        e_hi = -eps;
        base_points = cfg.shooting.e_scan_points;
        break;
      }
      case SweepMethod::kAnalyticRect: {
        const double eps = cfg.analytic_tol;
        e_lo = -spec.v1 + eps;
        e_hi = -eps;
        base_points = 2000;
        break;
      }
      case SweepMethod::kHOBasis: {
        im_tol = default_im_tol(spec.v1);
        e_lo = -spec.v1 + im_tol;
        e_hi = -im_tol;
        base_points = 2000;
        const ComplexMatrix h0 =
            build_gaussian_hamiltonian(spec.v1, 0.0, cfg.basis);
        const ComplexMatrix h1 =
            build_gaussian_hamiltonian(spec.v1, 1.0, cfg.basis);
        ho_base = h0;
        ho_xg = (h1 - h0).imag();
        break;
      }
      case SweepMethod::kWCPencil: {
        im_tol = default_im_tol(spec.v1);
        e_lo = -spec.v1 + im_tol;
        e_hi = -im_tol;
        base_points = 2000;
        auto [a0, b] = build_wc_pencil(spec.v1, 0.0, cfg.basis);
        wc_a0 = std::move(a0);
        wc_b = std::move(b);
        const int dim = cfg.basis.n_basis;
        wc_x = RealMatrix(dim, dim);
        for (int m = 0; m < dim; ++m) {
          for (int n = 0; n < dim; ++n) wc_x(m, n) = me_x(m, n);
        }
        break;
      }
    }
    // optional caller-chosen trace band
    if (cfg.e_window_lo != 0.0 || cfg.e_window_hi != 0.0) {
      if (!(cfg.e_window_lo < cfg.e_window_hi)) {
        throw ConfigError("energy window must satisfy lo < hi");
      }
      e_lo = std::max(e_lo, cfg.e_window_lo);
      e_hi = std::min(e_hi, cfg.e_window_hi);
      if (!(e_lo < e_hi)) throw ConfigError("energy window is empty");
    }
    spacing = (e_hi - e_lo) / (base_points - 1);
  }

  std::vector<double> matrix_spectrum(double v2) const {
    EigenResult res;
    if (cfg.method == SweepMethod::kHOBasis) {
      ComplexMatrix h = ho_base;
      h += Complex{0.0, v2} * ho_xg.cast<Complex>();
      res = eig_complex(h);
    } else {
      ComplexMatrix a = wc_a0;
      a += Complex{0.0, v2 * cfg.basis.scale} * wc_x.cast<Complex>();
      res = eig_pencil(a, wc_b);
    }
    if (!res.converged) {
      throw ConvergenceError("eigenvalue iteration did not converge");
    }
    return select_real(res.values, {e_lo, e_hi}, im_tol);
  }

  std::vector<double> spectrum(double v2) const {
    switch (cfg.method) {
      case SweepMethod::kShooting: {
        PotentialSpec s = spec;
        s.v2 = v2;
        return find_real_eigenvalues_in_window(s, cfg.shooting, e_lo, e_hi,
                                               base_points)
            .eigenvalues;
      }
      case SweepMethod::kAnalyticRect: {
        auto f = [&](double e) {
          return rect_eliminant(e, spec.v1, v2, spec.a);
        };
        return scan_function_roots(f, e_lo, e_hi, base_points,
                                   cfg.analytic_tol);
      }
      default:
        return matrix_spectrum(v2);
    }
  }

  std::vector<double> window(double v2, double lo, double hi) const {
    lo = std::max(lo, e_lo);
    hi = std::min(hi, e_hi);
    if (!(lo < hi)) return {};
    const int points = static_cast<int>(
        std::clamp((hi - lo) / (spacing / 10.0), 80.0, 2500.0));
    switch (cfg.method) {
      case SweepMethod::kShooting: {
        PotentialSpec s = spec;
        s.v2 = v2;
        return find_real_eigenvalues_in_window(s, cfg.shooting, lo, hi,
                                               points)
            .eigenvalues;
      }
      case SweepMethod::kAnalyticRect: {
        auto f = [&](double e) {
          return rect_eliminant(e, spec.v1, v2, spec.a);
        };
        return scan_function_roots(f, lo, hi, points, cfg.analytic_tol);
      }
      default: {
        std::vector<double> all = matrix_spectrum(v2);
        std::vector<double> out;
        for (double e : all) {
          if (e > lo && e < hi) out.push_back(e);
        }
        return out;
      }
    }
  }

  std::vector<double> spectrum_refined(double v2) const {
    std::vector<double> base = spectrum(v2);
    if (cfg.method == SweepMethod::kHOBasis ||
        cfg.method == SweepMethod::kWCPencil) {
      return base;  // algebraic in E; no scan resolution to refine
    }
    // near-degenerate neighbours get a local 10x-density re-scan
    std::vector<double> out;
    std::size_t i = 0;
    while (i < base.size()) {
      if (i + 1 < base.size() && base[i + 1] - base[i] < 10.0 * spacing) {
        const double lo = base[i] - 2.0 * spacing;
        const double hi = base[i + 1] + 2.0 * spacing;
        std::vector<double> fine = window(v2, lo, hi);
        if (fine.size() >= 2) {
          out.insert(out.end(), fine.begin(), fine.end());
        } else {
          out.push_back(base[i]);
          out.push_back(base[i + 1]);
        }
        i += 2;
      } else {
        out.push_back(base[i]);
        ++i;
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [&](double a, double b) {
                            return std::abs(a - b) < 1e-12;
                          }),
              out.end());
    return out;
  }
};

SpectrumEngine::SpectrumEngine(const PotentialSpec& spec,
                               const SweepConfig& cfg)
    : impl_(std::make_unique<Impl>(spec, cfg)) {}
SpectrumEngine::~SpectrumEngine() = default;

std::vector<double> SpectrumEngine::real_spectrum(double v2) const {
  return impl_->spectrum(v2);
}
std::vector<double> SpectrumEngine::real_spectrum_refined(double v2) const {
  return impl_->spectrum_refined(v2);
}
std::vector<double> SpectrumEngine::roots_in_window(double v2, double lo,
                                                    double hi) const {
  return impl_->window(v2, lo, hi);
}
double SpectrumEngine::scan_spacing() const { return impl_->spacing; }

namespace {

struct AliveBranch {
  int label = 0;
  double last_e = 0.0;
  double slope = 0.0;
  bool has_slope = false;

  double predict(double dv2) const {
    return has_slope ? last_e + slope * dv2 : last_e;
  }
};

double auto_match_gap(const std::vector<double>& first, double v1,
                      double spacing) {
  double gap;
  if (first.size() >= 2) {
    std::vector<double> diffs;
    for (std::size_t i = 0; i + 1 < first.size(); ++i) {
      diffs.push_back(first[i + 1] - first[i]);
    }
    std::sort(diffs.begin(), diffs.end());
    gap = 3.0 * diffs[diffs.size() / 2];
  } else {
    gap = 0.25 * v1;
  }
  return std::max(gap, 20.0 * spacing);
}

}  // namespace

SpectralCurves sweep(const PotentialSpec& spec, const SweepConfig& cfg) {
  validate_sweep_config(spec, cfg);
  const SpectrumEngine engine(spec, cfg);

  SpectralCurves curves;
  if (cfg.v2_max == cfg.v2_min) {
    curves.v2_grid = {cfg.v2_min};
  } else {
    curves.v2_grid.resize(cfg.steps);
    const double dv = (cfg.v2_max - cfg.v2_min) / (cfg.steps - 1);
    for (int i = 0; i < cfg.steps; ++i) {
      curves.v2_grid[i] = cfg.v2_min + i * dv;
    }
  }
  const std::size_t n_grid = curves.v2_grid.size();

  std::vector<std::vector<double>> spectra(n_grid);
  parallel_for(n_grid, [&](std::size_t i) {
    spectra[i] = engine.real_spectrum_refined(curves.v2_grid[i]);
  });

  const double spacing = engine.scan_spacing();
  const double match_gap = cfg.match_gap > 0.0
                               ? cfg.match_gap
                               : auto_match_gap(spectra[0], spec.v1, spacing);

  std::vector<AliveBranch> alive;
  int next_label = 0;
  auto start_branch = [&](double v2, double e) {
    Branch b;
    b.label = next_label++;
    b.points.push_back({v2, e});
    curves.branches.push_back(std::move(b));
    alive.push_back({curves.branches.back().label, e, 0.0, false});
  };

  for (double e : spectra[0]) start_branch(curves.v2_grid[0], e);

  auto branch_by_label = [&](int label) -> Branch& {
    for (Branch& b : curves.branches) {
      if (b.label == label) return b;
    }
    throw std::logic_error("unknown branch label");
  };

  for (std::size_t k = 1; k < n_grid; ++k) {
    const double v2 = curves.v2_grid[k];
    const double dv2 = v2 - curves.v2_grid[k - 1];
    const std::vector<double>& roots = spectra[k];

    // greedy matching by |root - prediction|
    struct Cand {
      double cost;
      std::size_t branch_idx;
      std::size_t root_idx;
    };
    std::vector<Cand> cands;
    for (std::size_t bi = 0; bi < alive.size(); ++bi) {
      const double pred = alive[bi].predict(dv2);
      for (std::size_t ri = 0; ri < roots.size(); ++ri) {
        const double cost = std::abs(roots[ri] - pred);
        if (cost <= match_gap) cands.push_back({cost, bi, ri});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return std::tie(a.cost, a.branch_idx, a.root_idx) <
             std::tie(b.cost, b.branch_idx, b.root_idx);
    });

    std::vector<int> branch_root(alive.size(), -1);
    std::vector<bool> root_taken(roots.size(), false);
    for (const Cand& c : cands) {
      if (branch_root[c.branch_idx] >= 0 || root_taken[c.root_idx]) continue;
      branch_root[c.branch_idx] = static_cast<int>(c.root_idx);
      root_taken[c.root_idx] = true;
    }

    std::vector<std::pair<std::size_t, double>> claimed;  // (branch idx, energy)
    for (std::size_t bi = 0; bi < alive.size(); ++bi) {
      if (branch_root[bi] >= 0) claimed.push_back({bi, roots[branch_root[bi]]});
    }

    // singleton rescue: a dense local re-scan around the prediction may
    // reveal a root the base scan could not resolve
    std::vector<std::size_t> dead;
    for (std::size_t bi = 0; bi < alive.size(); ++bi) {
      if (branch_root[bi] >= 0) continue;
      const double pred = alive[bi].predict(dv2);
      const double margin = std::max(6.0 * spacing, 0.05 * match_gap);
      std::vector<double> found =
          engine.roots_in_window(v2, pred - margin, pred + margin);
      double best = std::numeric_limits<double>::quiet_NaN();
      double best_cost = match_gap;
      for (double f : found) {
        bool taken = false;
        for (const auto& [ci, ce] : claimed) {
          if (std::abs(f - ce) < 1e-9 + 1e-9 * std::abs(f)) taken = true;
        }
        if (taken) continue;
        const double cost = std::abs(f - pred);
        if (cost < best_cost) {
          best_cost = cost;
          best = f;
        }
      }
      if (!std::isnan(best)) {
        claimed.push_back({bi, best});
        branch_root[bi] = -2;  // matched outside the base root list
        branch_by_label(alive[bi].label).points.push_back({v2, best});
      } else {
        dead.push_back(bi);
      }
    }

    for (const auto& [bi, e] : claimed) {
      AliveBranch& ab = alive[bi];
      if (branch_root[bi] >= 0) {
        branch_by_label(ab.label).points.push_back({v2, e});
      }
      ab.slope = (e - ab.last_e) / dv2;
      ab.has_slope = true;
      ab.last_e = e;
    }

    // pair up simultaneous losses (smallest gap first) and refine the
    // termination interval on a 10x finer v2 sub-grid
    std::sort(dead.begin(), dead.end(), [&](std::size_t x, std::size_t y) {
      return alive[x].last_e < alive[y].last_e;
    });
    std::vector<bool> paired(dead.size(), false);
    for (;;) {
      double best_gap = match_gap;
      int best_i = -1;
      for (std::size_t i = 0; i + 1 < dead.size(); ++i) {
        if (paired[i] || paired[i + 1]) continue;
        const double g = alive[dead[i + 1]].last_e - alive[dead[i]].last_e;
        if (g <= best_gap) {
          best_gap = g;
          best_i = static_cast<int>(i);
        }
      }
      if (best_i < 0) break;
      paired[best_i] = paired[best_i + 1] = true;

      const AliveBranch& b1 = alive[dead[best_i]];
      const AliveBranch& b2 = alive[dead[best_i + 1]];
      const double gap = b2.last_e - b1.last_e;
      const double margin = std::max(2.0 * gap, 6.0 * spacing);
      double w_lo = b1.last_e - margin;
      double w_hi = b2.last_e + margin;

      double last_both = curves.v2_grid[k - 1];
      double first_gone = v2;
      for (int j = 1; j <= 9; ++j) {
        const double v2s = curves.v2_grid[k - 1] + j * dv2 / 10.0;
        const std::vector<double> r = engine.roots_in_window(v2s, w_lo, w_hi);
        if (r.size() >= 2) {
          last_both = v2s;
          const double c = 0.5 * (r.front() + r.back());
          const double half = std::max(margin, r.back() - r.front());
          w_lo = c - half;
          w_hi = c + half;
        } else {
          first_gone = v2s;
          break;
        }
      }
      curves.terminations.push_back({std::min(b1.label, b2.label),
                                     std::max(b1.label, b2.label), last_both,
                                     first_gone});
    }

    // births: unclaimed roots become fresh branches (ascending energy)
    std::vector<std::size_t> remove;
    for (std::size_t bi = 0; bi < alive.size(); ++bi) {
      if (branch_root[bi] == -1) remove.push_back(bi);
    }
    for (auto it = remove.rbegin(); it != remove.rend(); ++it) {
      alive.erase(alive.begin() + *it);
    }
    for (std::size_t ri = 0; ri < roots.size(); ++ri) {
      if (!root_taken[ri]) start_branch(v2, roots[ri]);
    }
  }

  return curves;
}

std::vector<ExceptionalPoint> locate_eps(const PotentialSpec& spec,
                                         const SpectralCurves& curves,
                                         const SweepConfig& cfg) {
  validate_sweep_config(spec, cfg);
  const SpectrumEngine engine(spec, cfg);
  const double spacing = engine.scan_spacing();

  std::vector<ExceptionalPoint> eps;
  for (const Termination& term : curves.terminations) {
    const Branch* ba = nullptr;
    const Branch* bb = nullptr;
    for (const Branch& b : curves.branches) {
      if (b.label == term.label_a) ba = &b;
      if (b.label == term.label_b) bb = &b;
    }
    if (ba == nullptr || bb == nullptr || ba->points.empty() ||
        bb->points.empty()) {
      continue;
    }
    const double e1 = std::min(ba->points.back().energy,
                               bb->points.back().energy);
    const double e2 = std::max(ba->points.back().energy,
                               bb->points.back().energy);

    ExceptionalPoint ep;
    ep.branch_a = term.label_a;
    ep.branch_b = term.label_b;
    ep.method = cfg.method;

    const double margin = std::max(2.0 * (e2 - e1), 6.0 * spacing);
    double w_lo = e1 - margin;
    double w_hi = e2 + margin;

    std::vector<std::pair<double, double>> midpoints;  // (v2, pair midpoint)
    auto probe = [&](double v2) -> int {
      std::vector<double> r = engine.roots_in_window(v2, w_lo, w_hi);
      if (r.size() >= 2) {
        const double c = 0.5 * (r.front() + r.back());
        const double half = std::max(margin, r.back() - r.front());
        w_lo = c - half;
        w_hi = c + half;
        midpoints.push_back({v2, c});
      }
      return static_cast<int>(r.size());
    };

    double lo = term.v2_lo;
    double hi = term.v2_hi;
    const int n_lo = probe(lo);
    if (n_lo != 2) {
      ep.refined = false;
      ep.note = "root count at interval start is " + std::to_string(n_lo) +
                ", expected 2";
      ep.v2c = 0.5 * (lo + hi);
      ep.e_c = 0.5 * (e1 + e2);
      eps.push_back(std::move(ep));
      continue;
    }
    {
      const std::vector<double> r_hi = engine.roots_in_window(hi, w_lo, w_hi);
      if (!r_hi.empty()) {
        ep.refined = false;
        ep.note = "root count at interval end is " +
                  std::to_string(r_hi.size()) + ", expected 0";
        ep.v2c = 0.5 * (lo + hi);
        ep.e_c = 0.5 * (e1 + e2);
        eps.push_back(std::move(ep));
        continue;
      }
    }

    bool ambiguous = false;
    while (hi - lo > cfg.ep_tol_v2) {
      const double mid = 0.5 * (lo + hi);
      const int n = probe(mid);
      if (n >= 3) {
        ambiguous = true;
        ep.note = "root count " + std::to_string(n) + " inside the interval";
        break;
      }
      if (n == 2) {
        lo = mid;
      } else if (n == 0) {
        hi = mid;
      } else {
        // a single root in the window: the pair is merely unresolved at this
        // scan density, i.e. we are still below the coalescence point
        lo = mid;
      }
    }

    ep.refined = !ambiguous;
    ep.v2c = 0.5 * (lo + hi);
    if (midpoints.size() >= 2) {
      const auto& [va, ma] = midpoints[midpoints.size() - 2];
      const auto& [vb, mb] = midpoints.back();
      ep.e_c = (vb > va) ? mb + (mb - ma) / (vb - va) * (ep.v2c - vb) : mb;
    } else if (!midpoints.empty()) {
      ep.e_c = midpoints.back().second;
    } else {
      ep.e_c = 0.5 * (e1 + e2);
    }
    eps.push_back(std::move(ep));
  }
  return eps;
}

std::vector<CrossingEvent> detect_crossings(const SpectralCurves& curves) {
  std::vector<CrossingEvent> events;
  const std::vector<double>& grid = curves.v2_grid;

  auto start_index = [&](const Branch& b) {
    return static_cast<std::size_t>(
        std::lower_bound(grid.begin(), grid.end(), b.points.front().v2) -
        grid.begin());
  };

  for (std::size_t i = 0; i < curves.branches.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.branches.size(); ++j) {
      const Branch& bi = curves.branches[i];
      const Branch& bj = curves.branches[j];
      const std::size_t si = start_index(bi);
      const std::size_t sj = start_index(bj);
      const std::size_t lo = std::max(si, sj);
      const std::size_t hi_i = si + bi.points.size();
      const std::size_t hi_j = sj + bj.points.size();
      const std::size_t hi = std::min(hi_i, hi_j);
      if (hi <= lo + 1) continue;

      auto diff = [&](std::size_t k) {
        return bi.points[k - si].energy - bj.points[k - sj].energy;
      };

      struct PairEvent {
        std::size_t k;
        CrossingEvent e;
      };
      std::vector<PairEvent> pair_events;
      for (std::size_t k = lo; k + 1 < hi; ++k) {
        const double d0 = diff(k);
        const double d1 = diff(k + 1);
        if (d0 == 0.0) {
          // exact-grid tie: consult both neighbouring intervals
          if (k > lo && diff(k - 1) * d1 < 0.0) {
            pair_events.push_back({k,
                                   {grid[k], bi.points[k - si].energy,
                                    bi.label, bj.label}});
          }
          continue;
        }
        if (d1 == 0.0) continue;  // handled as the tie of the next interval
        if (d0 * d1 < 0.0) {
          // a sign change needs an established trajectory on both branches:
          // right after a pair is born (out of a complex pair, or by
          // entering the traced band) its ordering is below resolution
          if (k < si + 3 || k < sj + 3) continue;
          const double t = d0 / (d0 - d1);
          const double v2s = grid[k] + t * (grid[k + 1] - grid[k]);
          const double es = bi.points[k - si].energy +
                            t * (bi.points[k + 1 - si].energy -
                                 bi.points[k - si].energy);
          pair_events.push_back({k, {v2s, es, bi.label, bj.label}});
        }
      }
      // two flips within a few grid steps are linking jitter of an
      // unresolved near-degenerate pair, not two crossings: they cancel
      for (std::size_t a = 0; a + 1 < pair_events.size();) {
        if (pair_events[a + 1].k - pair_events[a].k <= 3) {
          pair_events.erase(pair_events.begin() + a, pair_events.begin() + a + 2);
        } else {
          ++a;
        }
      }
      for (const PairEvent& pe : pair_events) events.push_back(pe.e);
    }
  }
  std::sort(events.begin(), events.end(),
            [](const CrossingEvent& a, const CrossingEvent& b) {
              return a.v2_star < b.v2_star;
            });
  return events;
}

SweepOutcome run_sweep_with_eps(const PotentialSpec& spec,
                                const SweepConfig& cfg) {
  SweepOutcome out;
  out.curves = sweep(spec, cfg);
  out.eps = locate_eps(spec, out.curves, cfg);
  out.crossings = detect_crossings(out.curves);
  return out;
}

}  // namespace ptspec
