#include "ptspec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace ptspec {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += "\"";
  return out;
}

// settings values that parse as numbers are emitted as numbers
std::string json_value(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() && *end == '\0' && std::isfinite(v)) return s;
  return json_quote(s);
}

std::string number_array(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_number(xs[i]);
  }
  out += "]";
  return out;
}

}  // namespace

std::string manifest_json(const RunManifest& m) {
  std::ostringstream os;
  os << "{";
  os << "\"command\": " << json_quote(m.command) << ", ";
  os << "\"potential\": {\"model\": " << json_quote(model_token(m.spec.model))
     << ", \"v1\": " << format_number(m.spec.v1)
     << ", \"v2\": " << format_number(m.spec.v2)
     << ", \"a\": " << format_number(m.spec.a) << "}, ";
  os << "\"method\": " << json_quote(m.method) << ", ";
  os << "\"settings\": {";
  for (std::size_t i = 0; i < m.settings.size(); ++i) {
    if (i) os << ", ";
    os << json_quote(m.settings[i].first) << ": "
       << json_value(m.settings[i].second);
  }
  os << "}, ";
  os << "\"version\": " << json_quote(m.version) << ", ";
  // wall-clock stamps live only in SVG output so these files stay
  // byte-identical across reruns
  os << "\"timestamp\": null";
  os << "}";
  return os.str();
}

std::string spectrum_json(const SpectrumResult& result, const RunManifest& m) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"eigenvalues\": " << number_array(result.eigenvalues) << ",\n";
  os << "  \"residuals\": " << number_array(result.residuals) << ",\n";
  os << "  \"skipped_energies\": " << number_array(result.skipped_energies)
     << ",\n";
  os << "  \"method\": " << json_quote(m.method) << ",\n";
  os << "  \"manifest\": " << manifest_json(m) << "\n";
  os << "}\n";
  return os.str();
}

std::string curves_csv(const SpectralCurves& curves) {
  struct Row {
    double v2;
    int label;
    double energy;
  };
  std::vector<Row> rows;
  for (const Branch& b : curves.branches) {
    for (const BranchPoint& p : b.points) rows.push_back({p.v2, b.label, p.energy});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.v2 != b.v2) return a.v2 < b.v2;
    return a.label < b.label;
  });
  std::string out = "v2,branch_label,energy\n";
  for (const Row& r : rows) {
    out += format_number(r.v2);
    out += ',';
    out += std::to_string(r.label);
    out += ',';
    out += format_number(r.energy);
    out += '\n';
  }
  return out;
}

std::string eps_json_array(const std::vector<ExceptionalPoint>& eps) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const ExceptionalPoint& e = eps[i];
    if (i) os << ",";
    os << "\n    {\"v2c\": " << format_number(e.v2c)
       << ", \"e_c\": " << format_number(e.e_c) << ", \"branches\": ["
       << e.branch_a << ", " << e.branch_b << "], \"method\": "
       << json_quote(method_token(e.method))
       << ", \"refined\": " << (e.refined ? "true" : "false");
    if (!e.note.empty()) os << ", \"note\": " << json_quote(e.note);
    os << "}";
  }
  os << (eps.empty() ? "]" : "\n  ]");
  return os.str();
}

std::string crossings_json_array(const std::vector<CrossingEvent>& crossings) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const CrossingEvent& c = crossings[i];
    if (i) os << ",";
    os << "\n    {\"v2_star\": " << format_number(c.v2_star)
       << ", \"e_star\": " << format_number(c.e_star) << ", \"branches\": ["
       << c.branch_a << ", " << c.branch_b << "]}";
  }
  os << (crossings.empty() ? "]" : "\n  ]");
  return os.str();
}

std::string sweep_json(const std::vector<ExceptionalPoint>& eps,
                       const std::vector<CrossingEvent>& crossings,
                       const RunManifest& m) {
  std::ostringstream os;
  os << "{\n  \"eps\": " << eps_json_array(eps);
  os << ",\n  \"crossings\": " << crossings_json_array(crossings) << ",\n";
  os << "  \"manifest\": " << manifest_json(m) << "\n}\n";
  return os.str();
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
                          "#bcbd22", "#7f7f7f"};

struct AxisScale {
  double lo, hi;
  double px0, px1;
  double map(double x) const {
    return px0 + (x - lo) / (hi - lo) * (px1 - px0);
  }
};

void emit_ticks(std::ostringstream& os, const AxisScale& s, bool x_axis,
                double cross_px) {
  const int n_ticks = 6;
  for (int i = 0; i <= n_ticks; ++i) {
    const double v = s.lo + (s.hi - s.lo) * i / n_ticks;
    const double p = s.map(v);
    char label[32];
    std::snprintf(label, sizeof(label), "%.4g", v);
    if (x_axis) {
      os << "<line x1='" << p << "' y1='" << cross_px << "' x2='" << p
         << "' y2='" << cross_px + 5 << "' stroke='black'/>\n";
      os << "<text x='" << p << "' y='" << cross_px + 20
         << "' font-size='12' text-anchor='middle'>" << label << "</text>\n";
    } else {
      os << "<line x1='" << cross_px - 5 << "' y1='" << p << "' x2='"
         << cross_px << "' y2='" << p << "' stroke='black'/>\n";
      os << "<text x='" << cross_px - 8 << "' y='" << p + 4
         << "' font-size='12' text-anchor='end'>" << label << "</text>\n";
    }
  }
}

}  // namespace

std::string curves_svg(const SpectralCurves& curves,
                       const std::vector<ExceptionalPoint>& eps,
                       const RunManifest& m,
                       const std::optional<std::string>& timestamp) {
  const double width = 900, height = 700;
  const double ml = 80, mr = 25, mt = 25, mb = 60;

  double v2_lo = 0, v2_hi = 1, e_lo = -1, e_hi = 0;
  if (!curves.v2_grid.empty()) {
    v2_lo = curves.v2_grid.front();
    v2_hi = curves.v2_grid.back();
  }
  bool have_e = false;
  for (const Branch& b : curves.branches) {
    for (const BranchPoint& p : b.points) {
      if (!have_e) {
        e_lo = e_hi = p.energy;
        have_e = true;
      }
      e_lo = std::min(e_lo, p.energy);
      e_hi = std::max(e_hi, p.energy);
    }
  }
  for (const ExceptionalPoint& e : eps) {
    v2_hi = std::max(v2_hi, e.v2c);
    if (have_e) {
      e_lo = std::min(e_lo, e.e_c);
      e_hi = std::max(e_hi, e.e_c);
    }
  }
  if (v2_hi == v2_lo) v2_hi = v2_lo + 1;
  const double pad = 0.05 * (e_hi - e_lo == 0 ? 1.0 : e_hi - e_lo);
  e_lo -= pad;
  e_hi += pad;

  const AxisScale xs{v2_lo, v2_hi, ml, width - mr};
  const AxisScale ys{e_lo, e_hi, height - mb, mt};  // y grows downward

  std::ostringstream os;
  os << "<?xml version='1.0' encoding='UTF-8'?>\n";
  os << "<!-- manifest: " << manifest_json(m);
  if (timestamp) os << " generated: " << *timestamp;
  os << " -->\n";
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width
     << "' height='" << height << "' viewBox='0 0 " << width << " " << height
     << "'>\n";
  os << "<rect width='" << width << "' height='" << height
     << "' fill='white'/>\n";

  // axes
  os << "<line x1='" << ml << "' y1='" << height - mb << "' x2='"
     << width - mr << "' y2='" << height - mb << "' stroke='black'/>\n";
  os << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='"
     << height - mb << "' stroke='black'/>\n";
  emit_ticks(os, xs, true, height - mb);
  emit_ticks(os, ys, false, ml);
  os << "<text x='" << 0.5 * (ml + width - mr) << "' y='" << height - 15
     << "' font-size='16' text-anchor='middle'>V2</text>\n";
  os << "<text x='22' y='" << 0.5 * (mt + height - mb)
     << "' font-size='16' text-anchor='middle' transform='rotate(-90 22 "
     << 0.5 * (mt + height - mb) << ")'>E</text>\n";

  for (const Branch& b : curves.branches) {
    if (b.points.size() < 2) continue;
    const char* color = kPalette[b.label % 10];
    os << "<polyline fill='none' stroke='" << color
       << "' stroke-width='1.5' points='";
    for (const BranchPoint& p : b.points) {
      os << format_number(xs.map(p.v2)) << "," << format_number(ys.map(p.energy))
         << " ";
    }
    os << "'/>\n";
  }
  for (const ExceptionalPoint& e : eps) {
    os << "<circle cx='" << format_number(xs.map(e.v2c)) << "' cy='"
       << format_number(ys.map(e.e_c)) << "' r='4' fill='black'/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ptspec
