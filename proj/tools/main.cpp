// ptspec: real discrete spectra of complex PT-symmetric scattering wells,
// parametric evolution in the imaginary strength, exceptional points.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ptspec/basis.hpp"
#include "ptspec/eig.hpp"
#include "ptspec/errors.hpp"
#include "ptspec/rectwell.hpp"
#include "ptspec/report.hpp"
#include "ptspec/shooting.hpp"
#include "ptspec/sweep.hpp"
#include "ptspec/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct SolverFlags {
  std::string potential;
  double v1 = 0.0;
  double v2 = 0.0;
  double a = 2.0;
  std::string method = "shooting";
  double L = 0.0;
  double step = 1e-3;
  int e_scan = 2000;
  double root_tol = 1e-9;
  int n_basis = 0;  // 0 = method default (160 ho-basis, 140 wc-pencil)
  double scale = 1.0;
  bool auto_scale = false;
};

void add_potential_flags(CLI::App* cmd, SolverFlags& f, bool with_v2) {
  cmd->add_option("--potential", f.potential,
                  "model: rect|scarf2|gaussian|quartic|sech|wigner-coulomb")
      ->required();
  cmd->add_option("--v1", f.v1, "well depth (> 0)")->required();
  if (with_v2) {
    cmd->add_option("--v2", f.v2, "imaginary strength")->required();
  }
  cmd->add_option("--a", f.a, "half-width (rect only)")->capture_default_str();
  cmd->add_option("--method", f.method,
                  "shooting|analytic|ho-basis|wc-pencil")->capture_default_str();
}

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--L", f.L, "matching distance (0 = model default)")->capture_default_str();
  cmd->add_option("--step", f.step, "integration step")->capture_default_str();
  cmd->add_option("--e-scan", f.e_scan, "energy scan grid points")->capture_default_str();
  cmd->add_option("--root-tol", f.root_tol, "energy bisection tolerance")->capture_default_str();
  cmd->add_option("--n-basis", f.n_basis,
                  "basis truncation (0 = method default)")->capture_default_str();
  cmd->add_option("--scale", f.scale, "basis length scale")->capture_default_str();
  cmd->add_flag("--auto-scale", f.auto_scale,
                "tune the basis scale by trace minimisation");
}

ptspec::PotentialSpec parse_spec(const SolverFlags& f) {
  ptspec::PotentialSpec spec;
  if (!ptspec::parse_model_token(f.potential, spec.model)) {
    throw ptspec::ConfigError("unknown potential '" + f.potential + "'");
  }
  spec.v1 = f.v1;
  spec.v2 = f.v2;
  spec.a = f.a;
  ptspec::validate_spec(spec);
  return spec;
}

ptspec::SweepMethod parse_method(const SolverFlags& f) {
  ptspec::SweepMethod method;
  if (!ptspec::parse_method_token(f.method, method)) {
    throw ptspec::ConfigError("unknown method '" + f.method + "'");
  }
  return method;
}

int resolve_n_basis(const SolverFlags& f, ptspec::SweepMethod method) {
  if (f.n_basis > 0) return f.n_basis;
  return method == ptspec::SweepMethod::kWCPencil ? 140 : 160;
}

void check_method_model(ptspec::SweepMethod method,
                        const ptspec::PotentialSpec& spec) {
  using ptspec::PotentialModel;
  using ptspec::SweepMethod;
  if (method == SweepMethod::kAnalyticRect &&
      spec.model != PotentialModel::kRect) {
    throw ptspec::ConfigError("analytic method applies to rect only");
  }
  if (method == SweepMethod::kHOBasis &&
      spec.model != PotentialModel::kGaussian) {
    throw ptspec::ConfigError("ho-basis method applies to gaussian only");
  }
  if (method == SweepMethod::kWCPencil &&
      spec.model != PotentialModel::kWignerCoulomb) {
    throw ptspec::ConfigError("wc-pencil method applies to wigner-coulomb only");
  }
}

std::string join_command(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    const std::string arg = argv[i];
    if (arg.find(' ') != std::string::npos) {
      out += '"' + arg + '"';
    } else {
      out += arg;
    }
  }
  return out;
}

std::string fmt(double x) { return ptspec::format_number(x); }

ptspec::RunManifest make_manifest(const std::string& command,
                                  const ptspec::PotentialSpec& spec,
                                  const std::string& method) {
  ptspec::RunManifest m;
  m.command = command;
  m.spec = spec;
  m.method = method;
  return m;
}

double resolve_scale(const SolverFlags& f, const ptspec::PotentialSpec& spec,
                     int n_basis) {
  if (f.auto_scale) return ptspec::autotune_scale(spec.v1, n_basis);
  return f.scale;
}

int cmd_spectrum(const SolverFlags& f, const std::string& command) {
  const ptspec::PotentialSpec spec = parse_spec(f);
  const ptspec::SweepMethod method = parse_method(f);
  check_method_model(method, spec);

  ptspec::RunManifest manifest = make_manifest(command, spec, f.method);
  ptspec::SpectrumResult result;

  switch (method) {
    case ptspec::SweepMethod::kShooting: {
      ptspec::ShootingConfig cfg;
      cfg.L = f.L;
      cfg.step = f.step;
      cfg.e_scan_points = f.e_scan;
      cfg.root_tol = f.root_tol;
      cfg = ptspec::resolve_shooting_config(spec, cfg);
      result = ptspec::find_real_eigenvalues(spec, cfg);
      manifest.settings = {{"L", fmt(cfg.L)},
                           {"step", fmt(cfg.step)},
                           {"e_scan_points", std::to_string(cfg.e_scan_points)},
                           {"root_tol", fmt(cfg.root_tol)},
                           {"residual_tol", fmt(cfg.residual_tol)}};
      break;
    }
    case ptspec::SweepMethod::kAnalyticRect: {
      result = ptspec::rect_spectrum(spec.v1, spec.v2, spec.a, f.root_tol);
      manifest.settings = {{"tol", fmt(f.root_tol)}};
      break;
    }
    case ptspec::SweepMethod::kHOBasis:
    case ptspec::SweepMethod::kWCPencil: {
      ptspec::BasisConfig basis;
      basis.n_basis = resolve_n_basis(f, method);
      basis.scale = resolve_scale(f, spec, basis.n_basis);
      const double im_tol = ptspec::default_im_tol(spec.v1);
      ptspec::EigenResult eig;
      if (method == ptspec::SweepMethod::kHOBasis) {
        eig = ptspec::eig_complex(
            ptspec::build_gaussian_hamiltonian(spec.v1, spec.v2, basis));
      } else {
        auto [a, b] = ptspec::build_wc_pencil(spec.v1, spec.v2, basis);
        eig = ptspec::eig_pencil(a, b);
      }
      if (!eig.converged) {
        throw ptspec::ConvergenceError("eigenvalue iteration did not converge");
      }
      result.eigenvalues = ptspec::select_real(
          eig.values, {-spec.v1 + im_tol, -im_tol}, im_tol);
      result.residuals.assign(result.eigenvalues.size(), 0.0);
      manifest.settings = {{"n_basis", std::to_string(basis.n_basis)},
                           {"scale", fmt(basis.scale)},
                           {"im_tol", fmt(im_tol)}};
      break;
    }
  }
  std::cout << ptspec::spectrum_json(result, manifest);
  return kExitOk;
}

struct SweepFlags {
  double v2_min = 0.0;
  double v2_max = 0.0;
  int steps = 400;
  double ep_tol = 1e-3;
  double match_gap = 0.0;
  double e_min = 0.0;
  double e_max = 0.0;
  std::string out_csv;
  std::string out_json;
  std::string out_svg;
  bool reproducible = false;
};

ptspec::SweepConfig build_sweep_config(const SolverFlags& f,
                                       const SweepFlags& sf,
                                       const ptspec::PotentialSpec& spec) {
  ptspec::SweepConfig cfg;
  cfg.v2_min = sf.v2_min;
  cfg.v2_max = sf.v2_max;
  cfg.steps = sf.steps;
  cfg.method = parse_method(f);
  cfg.match_gap = sf.match_gap;
  cfg.ep_tol_v2 = sf.ep_tol;
  cfg.shooting.L = f.L;
  cfg.shooting.step = f.step;
  cfg.shooting.e_scan_points = f.e_scan;
  cfg.shooting.root_tol = f.root_tol;
  cfg.basis.n_basis = resolve_n_basis(f, cfg.method);
  cfg.basis.scale = resolve_scale(f, spec, cfg.basis.n_basis);
  cfg.analytic_tol = f.root_tol;
  cfg.e_window_lo = sf.e_min;
  cfg.e_window_hi = sf.e_max;
  return cfg;
}

void fill_sweep_settings(ptspec::RunManifest& manifest,
                         const ptspec::SweepConfig& cfg,
                         const ptspec::PotentialSpec& spec) {
  manifest.settings = {
      {"v2_min", fmt(cfg.v2_min)},
      {"v2_max", fmt(cfg.v2_max)},
      {"steps", std::to_string(cfg.steps)},
      {"ep_tol_v2", fmt(cfg.ep_tol_v2)},
      {"match_gap", cfg.match_gap > 0 ? fmt(cfg.match_gap) : "auto"},
  };
  if (cfg.method == ptspec::SweepMethod::kShooting) {
    const ptspec::ShootingConfig rc =
        ptspec::resolve_shooting_config(spec, cfg.shooting);
    manifest.settings.push_back({"L", fmt(rc.L)});
    manifest.settings.push_back({"step", fmt(rc.step)});
    manifest.settings.push_back(
        {"e_scan_points", std::to_string(rc.e_scan_points)});
    manifest.settings.push_back({"root_tol", fmt(rc.root_tol)});
  } else if (cfg.method != ptspec::SweepMethod::kAnalyticRect) {
    manifest.settings.push_back(
        {"n_basis", std::to_string(cfg.basis.n_basis)});
    manifest.settings.push_back({"scale", fmt(cfg.basis.scale)});
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ptspec::ConfigError("cannot open '" + path + "' for writing");
  out << content;
  if (!out.good()) throw ptspec::ConfigError("write to '" + path + "' failed");
}

std::string iso_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

int cmd_sweep(const SolverFlags& f, const SweepFlags& sf,
              const std::string& command) {
  const ptspec::PotentialSpec spec = parse_spec(f);
  const ptspec::SweepConfig cfg = build_sweep_config(f, sf, spec);
  const ptspec::SweepOutcome outcome = ptspec::run_sweep_with_eps(spec, cfg);

  ptspec::RunManifest manifest = make_manifest(command, spec, f.method);
  fill_sweep_settings(manifest, cfg, spec);

  write_file(sf.out_csv, ptspec::curves_csv(outcome.curves));
  write_file(sf.out_json,
             ptspec::sweep_json(outcome.eps, outcome.crossings, manifest));
  if (!sf.out_svg.empty()) {
    const std::optional<std::string> stamp =
        sf.reproducible ? std::nullopt
                        : std::optional<std::string>(iso_timestamp());
    write_file(sf.out_svg,
               ptspec::curves_svg(outcome.curves, outcome.eps, manifest,
                                  stamp));
  }
  std::fprintf(stderr, "%zu branches, %zu exceptional points, %zu crossings\n",
               outcome.curves.branches.size(), outcome.eps.size(),
               outcome.crossings.size());
  return kExitOk;
}

int cmd_eps_or_crossings(const SolverFlags& f, const SweepFlags& sf,
                         const std::string& command, bool eps_only) {
  const ptspec::PotentialSpec spec = parse_spec(f);
  const ptspec::SweepConfig cfg = build_sweep_config(f, sf, spec);
  const ptspec::SweepOutcome outcome = ptspec::run_sweep_with_eps(spec, cfg);
  ptspec::RunManifest manifest = make_manifest(command, spec, f.method);
  fill_sweep_settings(manifest, cfg, spec);
  if (eps_only) {
    std::cout << "{\n  \"eps\": " << ptspec::eps_json_array(outcome.eps)
              << ",\n  \"manifest\": " << ptspec::manifest_json(manifest)
              << "\n}\n";
  } else {
    std::cout << "{\n  \"crossings\": "
              << ptspec::crossings_json_array(outcome.crossings)
              << ",\n  \"manifest\": " << ptspec::manifest_json(manifest)
              << "\n}\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "real discrete spectra of complex PT-symmetric scattering potentials"};
  app.require_subcommand(1);

  SolverFlags spectrum_flags;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "real eigenvalues at one (potential, v1, v2)");
  add_potential_flags(spectrum, spectrum_flags, true);
  add_solver_flags(spectrum, spectrum_flags);

  SolverFlags sweep_flags_solver;
  SweepFlags sweep_flags;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "trace eigenvalue branches over a v2 range; emit CSV/JSON/SVG");
  add_potential_flags(sweep_cmd, sweep_flags_solver, false);
  add_solver_flags(sweep_cmd, sweep_flags_solver);
  sweep_cmd->add_option("--v2-min", sweep_flags.v2_min, "sweep start")->capture_default_str();
  sweep_cmd->add_option("--v2-max", sweep_flags.v2_max, "sweep end")
      ->required();
  sweep_cmd->add_option("--steps", sweep_flags.steps, "v2 grid points")->capture_default_str();
  sweep_cmd->add_option("--ep-tol", sweep_flags.ep_tol,
                        "v2 bisection tolerance for exceptional points")->capture_default_str();
  sweep_cmd->add_option("--match-gap", sweep_flags.match_gap,
                        "branch linking gap (0 = auto)")->capture_default_str();
  sweep_cmd->add_option("--e-min", sweep_flags.e_min,
                        "lower edge of the traced energy band (0 0 = full well)")
      ->capture_default_str();
  sweep_cmd->add_option("--e-max", sweep_flags.e_max,
                        "upper edge of the traced energy band")
      ->capture_default_str();
  sweep_cmd->add_option("--out-csv", sweep_flags.out_csv, "curves CSV path")
      ->required();
  sweep_cmd->add_option("--out-json", sweep_flags.out_json,
                        "exceptional points / crossings JSON path")
      ->required();
  sweep_cmd->add_option("--out-svg", sweep_flags.out_svg,
                        "optional SVG plot path");
  sweep_cmd->add_flag("--reproducible", sweep_flags.reproducible,
                      "omit the timestamp from the SVG manifest");

  SolverFlags eps_flags_solver;
  SweepFlags eps_flags;
  CLI::App* eps_cmd = app.add_subcommand(
      "eps", "locate exceptional points over a v2 range (JSON to stdout)");
  add_potential_flags(eps_cmd, eps_flags_solver, false);
  add_solver_flags(eps_cmd, eps_flags_solver);
  eps_cmd->add_option("--v2-min", eps_flags.v2_min, "sweep start")->capture_default_str();
  eps_cmd->add_option("--v2-max", eps_flags.v2_max, "sweep end")->required();
  eps_cmd->add_option("--steps", eps_flags.steps, "v2 grid points")->capture_default_str();
  eps_cmd->add_option("--ep-tol", eps_flags.ep_tol,
                      "v2 bisection tolerance")->capture_default_str();

  SolverFlags crossings_flags_solver;
  SweepFlags crossings_flags;
  CLI::App* crossings_cmd = app.add_subcommand(
      "crossings", "detect real-to-real level crossings (JSON to stdout)");
  add_potential_flags(crossings_cmd, crossings_flags_solver, false);
  add_solver_flags(crossings_cmd, crossings_flags_solver);
  crossings_cmd->add_option("--v2-min", crossings_flags.v2_min, "sweep start")->capture_default_str();
  crossings_cmd->add_option("--v2-max", crossings_flags.v2_max, "sweep end")
      ->required();
  crossings_cmd->add_option("--steps", crossings_flags.steps, "v2 grid points")->capture_default_str();

  bool validate_fast = false;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "run the oracle suite; exit 0 iff every check passes");
  validate_cmd->add_flag("--fast", validate_fast,
                         "reduced grids, skips the figure reproductions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = join_command(argc, argv);
  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_flags, command);
    if (sweep_cmd->parsed()) {
      return cmd_sweep(sweep_flags_solver, sweep_flags, command);
    }
    if (eps_cmd->parsed()) {
      return cmd_eps_or_crossings(eps_flags_solver, eps_flags, command, true);
    }
    if (crossings_cmd->parsed()) {
      return cmd_eps_or_crossings(crossings_flags_solver, crossings_flags,
                                  command, false);
    }
    if (validate_cmd->parsed()) {
      const std::vector<ptspec::CheckResult> results =
          ptspec::run_validation(validate_fast);
      return ptspec::print_validation_report(results) ? kExitOk
                                                      : kExitValidationFailure;
    }
  } catch (const ptspec::ConvergenceError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidationFailure;
  }
  return kExitUsage;
}
