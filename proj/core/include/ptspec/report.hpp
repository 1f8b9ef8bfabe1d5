#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptspec/shooting.hpp"
#include "ptspec/sweep.hpp"

namespace ptspec {

/// Everything needed to reproduce an output bit for bit. Serialized next
/// to every result. The timestamp is only ever embedded in SVG output
/// (and suppressed there under --reproducible) so CSV/JSON stay
/// byte-identical across reruns.
struct RunManifest {
  std::string command;
  PotentialSpec spec;
  std::string method;
  std::vector<std::pair<std::string, std::string>> settings;  // resolved defaults
  std::string version = kVersion;
};

/// Doubles are serialized with 12 significant digits everywhere.
std::string format_number(double x);

std::string manifest_json(const RunManifest& m);

/// {"eigenvalues": [...], "residuals": [...], "method": ..., "manifest": ...}
std::string spectrum_json(const SpectrumResult& result, const RunManifest& m);

/// Long format, one row per alive branch per grid point, sorted by v2 then
/// branch label. Columns: v2, branch_label, energy.
std::string curves_csv(const SpectralCurves& curves);

/// JSON arrays for the exceptional-point and crossing lists.
std::string eps_json_array(const std::vector<ExceptionalPoint>& eps);
std::string crossings_json_array(const std::vector<CrossingEvent>& crossings);

/// {"eps": [...], "crossings": [...], "manifest": ...}
std::string sweep_json(const std::vector<ExceptionalPoint>& eps,
                       const std::vector<CrossingEvent>& crossings,
                       const RunManifest& m);

/// Static 900x700 plot: one polyline per branch, filled circles at the
/// exceptional points, auto-scaled linear axes. `timestamp` (when given)
/// is embedded in the manifest comment.
std::string curves_svg(const SpectralCurves& curves,
                       const std::vector<ExceptionalPoint>& eps,
                       const RunManifest& m,
                       const std::optional<std::string>& timestamp);

}  // namespace ptspec
