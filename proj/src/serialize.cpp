#include "eulersub/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace eulersub {

namespace {

std::string bare(const QuadNum& q) {
  std::string s = q.to_string();
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

// Shortest %g form that reads back to the same double.
std::string shortest(double v) {
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string numeric_poly(const NumericPoly& p, std::string_view var) {
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const double c = p.coeffs[static_cast<size_t>(k)];
    if (c == 0.0) continue;
    const double mag = std::abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool unit = mag == 1.0 && k > 0;
    if (!unit) out += shortest(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

Json error_json(ErrorCode code) { return Json{{"error", std::string(error_name(code))}}; }

}  // namespace

std::string numeric_to_string(const NumericRatFunc& f, std::string_view var) {
  return "(" + numeric_poly(f.num, var) + ") / (" + numeric_poly(f.den, var) + ")";
}

Json to_json(const QuadNum& value) { return bare(value); }

Json to_json(const CurvePoint& point) { return Json{{"x", bare(point.x)}, {"y", bare(point.y)}}; }

Json classification_json(const Conic& conic) {
  Json out;
  out["class"] = std::string(to_string(conic.classify()));
  out["discriminant"] = conic.discriminant().to_string();
  if (conic.a().is_zero()) {
    out["canonical"] = nullptr;
  } else {
    const CanonicalForm cf = conic.canonical_form();
    out["canonical"] = Json{{"p", cf.p.to_string()}, {"q", cf.q.to_string()}};
  }
  const CharacteristicPoints pts = conic.characteristic_points();
  Json points = Json::object();
  auto put = [&](const char* name, const std::optional<CurvePoint>& p) {
    points[name] = p ? to_json(*p) : Json(nullptr);
  };
  put("M1", pts.m1);
  put("M2", pts.m2);
  put("V1", pts.v1);
  put("V2", pts.v2);
  put("R1", pts.r1);
  put("R2", pts.r2);
  out["points"] = std::move(points);
  return out;
}

Json parameterization_json(const Parameterization& param) {
  Json out;
  out["method"] = param.method().to_string();
  out["exact"] = param.exact();
  if (param.exact()) {
    out["radicand"] = param.radicand().to_string();
    out["x"] = param.x_of_t().to_string("t");
    out["y"] = param.y_of_t().to_string("t");
    out["dxdt"] = param.dxdt().to_string("t");
  } else {
    out["radicand"] = nullptr;
    out["x"] = numeric_to_string(param.numeric_x(), "u");
    out["y"] = numeric_to_string(param.numeric_y(), "u");
    out["dxdt"] = numeric_to_string(param.numeric_dxdt(), "u");
  }
  if (param.anchor()) {
    out["anchor"] = to_json(*param.anchor());
  } else {
    out["anchor"] = nullptr;
  }
  const double tp = param.anchor_parameter();
  if (std::isnan(tp))
    out["anchor_parameter"] = nullptr;
  else if (std::isinf(tp))
    out["anchor_parameter"] = "infinity";
  else
    out["anchor_parameter"] = tp;
  out["domain"] = param.domain_note();
  return out;
}

Json report_json(const CrossCheckReport& report) {
  Json out;
  out["direct"] = report.direct ? Json(*report.direct) : error_json(*report.direct_error);
  Json methods = Json::object();
  for (const MethodOutcome& m : report.methods)
    methods[m.method.to_string()] = m.value ? Json(*m.value) : error_json(*m.error);
  out["methods"] = std::move(methods);
  out["max_deviation"] = report.max_deviation;
  out["direct_deviation"] = report.direct_deviation;
  return out;
}

}  // namespace eulersub
