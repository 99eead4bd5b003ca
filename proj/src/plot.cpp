#include "eulersub/plot.hpp"

#include "eulersub/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace eulersub {

namespace {

struct Pt {
  double x;
  double y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Curve samples, one polyline per connected run.
std::vector<std::vector<Pt>> trace_conic(const Conic& conic, double x_min, double x_max) {
  std::vector<std::vector<Pt>> runs;
  if (conic.classify() == ConicClass::Ellipse) {
    const CanonicalForm cf = conic.canonical_form();
    const double p = cf.p.to_double();
    const double rx = std::sqrt((cf.q / conic.a().abs()).to_double());
    const double ry = std::sqrt(cf.q.to_double());
    std::vector<Pt> ring;
    for (int i = 0; i <= 360; ++i) {
      const double th = 2.0 * std::numbers::pi * i / 360.0;
      ring.push_back({p + rx * std::cos(th), ry * std::sin(th)});
    }
    runs.push_back(std::move(ring));
    return runs;
  }
  // Uniform samples plus the exact x-axis crossings so branches meet y = 0.
  std::vector<double> xs;
  const int n = 800;
  for (int i = 0; i <= n; ++i) xs.push_back(x_min + (x_max - x_min) * i / n);
  const CharacteristicPoints pts = conic.characteristic_points();
  for (const auto& r : {pts.r1, pts.r2})
    if (r) {
      const double x = r->x.to_double();
      if (x > x_min && x < x_max) xs.push_back(x);
    }
  std::sort(xs.begin(), xs.end());
  for (double sgn : {1.0, -1.0}) {
    std::vector<Pt> run;
    for (double x : xs) {
      const double v = conic.value_at(x);
      if (v >= -1e-12) {
        run.push_back({x, sgn * std::sqrt(std::max(v, 0.0))});
      } else if (!run.empty()) {
        runs.push_back(std::move(run));
        run.clear();
      }
    }
    if (run.size() > 1) runs.push_back(std::move(run));
  }
  return runs;
}

std::optional<Pt> curve_point(const Parameterization& param, const Rational& t) {
  try {
    if (param.exact()) {
      const QuadNum tq = QuadNum::rational(t, param.radicand());
      return Pt{param.x_of_t().eval(tq).to_double(), param.y_of_t().eval(tq).to_double()};
    }
    return Pt{param.numeric_x().eval(t.to_double()), param.numeric_y().eval(t.to_double())};
  } catch (const Error& err) {
    if (err.code() != ErrorCode::PoleEvaluation) throw;
    return std::nullopt;
  }
}

// Slope of the parallel chords when the pencil's base point is at infinity.
double parallel_slope(const Parameterization& param) {
  const double root_a = std::sqrt(param.conic().a().to_double());
  if (param.method().kind == MethodKind::Euler1) return sign_value(param.method().sign) * root_a;
  return root_a;
}

}  // namespace

PlotResult plot_svg(const Parameterization& param, const PlotOptions& options) {
  const Conic& conic = param.conic();
  PlotResult result;

  double x_min = options.x_min;
  double x_max = options.x_max;
  if (conic.classify() == ConicClass::Ellipse) {
    const CanonicalForm cf = conic.canonical_form();
    const double rx = std::sqrt((cf.q / conic.a().abs()).to_double());
    x_min = cf.p.to_double() - 1.25 * rx;
    x_max = cf.p.to_double() + 1.25 * rx;
  }
  const auto runs = trace_conic(conic, x_min, x_max);

  double y_extent = 1.0;
  for (const auto& run : runs)
    for (const Pt& p : run) y_extent = std::max(y_extent, std::abs(p.y));
  if (conic.classify() == ConicClass::Ellipse) y_extent *= 1.25;

  // Equal aspect, centred.
  const double span_x = x_max - x_min;
  const double span_y = 2.0 * y_extent;
  const double scale = std::min(options.width / span_x, options.height / span_y);
  const double off_x = (options.width - scale * span_x) / 2.0;
  const double off_y = (options.height - scale * span_y) / 2.0;
  auto px = [&](double x) { return off_x + (x - x_min) * scale; };
  auto py = [&](double y) { return off_y + (y_extent - y) * scale; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << options.height
      << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n";
  svg << "<title>" << escape("y^2 = " + conic.a().to_string() + "*x^2 + " + conic.b().to_string() + "*x + " +
                             conic.c().to_string() + ", " + param.method().to_string())
      << "</title>\n";
  svg << "<style>.conic{fill:none;stroke:#1f4e9c;stroke-width:2}"
         ".chord{fill:none;stroke:#c0392b;stroke-width:1}"
         ".axis{stroke:#999;stroke-width:0.5}"
         ".point{fill:#333}.anchor{fill:#c0392b}"
         "text{font-family:sans-serif;font-size:12px}</style>\n";

  svg << "<line class=\"axis\" x1=\"" << fmt(px(x_min)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(x_max))
      << "\" y2=\"" << fmt(py(0)) << "\"/>\n";
  if (x_min < 0 && x_max > 0)
    svg << "<line class=\"axis\" x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(y_extent)) << "\" x2=\""
        << fmt(px(0)) << "\" y2=\"" << fmt(py(-y_extent)) << "\"/>\n";

  for (const auto& run : runs) {
    svg << "<polyline class=\"conic\" points=\"";
    for (std::size_t i = 0; i < run.size(); ++i) svg << (i ? " " : "") << fmt(px(run[i].x)) << ',' << fmt(py(run[i].y));
    svg << "\"/>\n";
  }

  const std::optional<CurvePoint>& anchor = param.anchor();
  std::optional<Pt> anchor_pt;
  if (anchor) anchor_pt = Pt{param.numeric_anchor().first, param.numeric_anchor().second};

  for (const Rational& t : options.chord_parameters) {
    const std::optional<Pt> p = curve_point(param, t);
    if (!p) {
      result.notices.push_back("t = " + t.to_string() + ": skipped, the parameterization has a pole there");
      continue;
    }
    Pt from, to;
    if (anchor_pt) {
      if (std::hypot(p->x - anchor_pt->x, p->y - anchor_pt->y) < 1e-12) {
        result.notices.push_back("t = " + t.to_string() + ": skipped, the chord degenerates to the tangent at the anchor");
        continue;
      }
      from = *anchor_pt;
      to = *p;
    } else {
      const double k = parallel_slope(param);
      from = {x_min, p->y + k * (x_min - p->x)};
      to = {x_max, p->y + k * (x_max - p->x)};
    }
    svg << "<path class=\"chord\" data-t=\"" << t.to_string() << "\" d=\"M " << fmt(px(from.x)) << ' '
        << fmt(py(from.y)) << " L " << fmt(px(to.x)) << ' ' << fmt(py(to.y)) << "\"/>\n";
    ++result.chords;
  }

  auto label = [&](const std::string& name, Pt p, const char* cls) {
    svg << "<circle class=\"" << cls << "\" cx=\"" << fmt(px(p.x)) << "\" cy=\"" << fmt(py(p.y)) << "\" r=\"3\"/>\n";
    svg << "<text x=\"" << fmt(px(p.x) + 5) << "\" y=\"" << fmt(py(p.y) - 5) << "\">" << escape(name) << "</text>\n";
  };

  const CharacteristicPoints pts = conic.characteristic_points();
  std::string anchor_name;
  const std::pair<const char*, const std::optional<CurvePoint>*> named[] = {
      {"M1", &pts.m1}, {"M2", &pts.m2}, {"V1", &pts.v1}, {"V2", &pts.v2}, {"R1", &pts.r1}, {"R2", &pts.r2}};
  for (const auto& [name, point] : named) {
    if (!*point) continue;
    const Pt p{(*point)->x.to_double(), (*point)->y.to_double()};
    if (anchor_pt && std::hypot(p.x - anchor_pt->x, p.y - anchor_pt->y) < 1e-12) {
      anchor_name += std::string(name) + " = ";
      continue;
    }
    label(name, p, "point");
  }
  if (anchor_pt) label(anchor_name + "P0", *anchor_pt, "anchor");

  for (const std::string& note : result.notices) svg << "<!-- " << escape(note) << " -->\n";
  svg << "</svg>\n";
  result.svg = svg.str();
  return result;
}

}  // namespace eulersub
