#include "eulersub/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "eulersub/plot.hpp"
#include "eulersub/serialize.hpp"

namespace eulersub::cli {

namespace {

// Bad input that is the caller's fault rather than the mathematics'.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string a, b, c;
  std::vector<std::string> methods;
  std::string expr;
  std::string from, to;
  std::string branch = "+";
  std::string format = "text";
  std::string output;
  double tolerance = 1e-9;
  int nodes = 32;
  int panels = 64;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

Conic parse_conic(const Options& o) {
  return Conic(parse_rational(o.a, "-a"), parse_rational(o.b, "-b"), parse_rational(o.c, "-c"));
}

Method parse_method(const std::string& text) {
  try {
    return Method::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("-m: ") + e.what() +
                     "\nmethods: euler1+ euler1- euler2+ euler2- euler3:1 euler3:2 euler4+ euler4- "
                     "point:<x0>:+ point:<x0>:- original tau trig");
  }
}

Expr parse_expr(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("-e: ") + e.what() + "\n  " + text + "\n  " + std::string(e.offset(), ' ') +
                     "^\ngrammar: expr := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,\n"
                     "         unary := '-' unary | atom ('^' ['-'] int)?, atom := int ['/' int] | x | y | '(' expr ')'");
  }
}

Sign parse_branch(const std::string& text) {
  if (text == "+") return Sign::Plus;
  if (text == "-") return Sign::Minus;
  throw UsageError("--branch must be + or -, got '" + text + "'");
}

QuadratureConfig quadrature(const Options& o) {
  QuadratureConfig cfg;
  cfg.nodes_per_panel = o.nodes;
  cfg.panels = o.panels;
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string point_text(const std::optional<CurvePoint>& p) {
  if (!p) return "none";
  return "(" + to_json(p->x).get<std::string>() + ", " + to_json(p->y).get<std::string>() + ")";
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Conic conic = parse_conic(o);
  if (o.format == "json") {
    print_json(out, classification_json(conic));
    return kExitOk;
  }
  out << "class: " << to_string(conic.classify()) << '\n';
  out << "discriminant: " << conic.discriminant() << '\n';
  if (conic.a().is_zero()) {
    out << "canonical: none (a = 0)\n";
  } else {
    const CanonicalForm cf = conic.canonical_form();
    out << "canonical: y^2 = a*(x - p)^2 + q with p = " << cf.p << ", q = " << cf.q << '\n';
  }
  const CharacteristicPoints pts = conic.characteristic_points();
  out << "M1: " << point_text(pts.m1) << "\nM2: " << point_text(pts.m2) << '\n';
  out << "V1: " << point_text(pts.v1) << "\nV2: " << point_text(pts.v2) << '\n';
  out << "R1: " << point_text(pts.r1) << "\nR2: " << point_text(pts.r2) << '\n';
  return kExitOk;
}

Parameterization single_param(const Options& o) {
  if (o.methods.size() != 1) throw UsageError("exactly one -m is required");
  return parametrize(parse_conic(o), parse_method(o.methods.front()));
}

int cmd_parametrize(const Options& o, std::ostream& out) {
  const Parameterization param = single_param(o);
  const Json j = parameterization_json(param);
  if (o.format == "json") {
    print_json(out, j);
    return kExitOk;
  }
  const std::string var = param.exact() ? "t" : "u";
  out << "method: " << param.method().to_string() << '\n';
  if (param.exact() && param.radicand().exact_sqrt())
    out << "field: Q\n";
  else if (param.exact())
    out << "field: Q(sqrt(" << param.radicand() << "))\n";
  else
    out << "field: numeric coefficients (two unrelated surds)\n";
  out << "x(" << var << ") = " << j["x"].get<std::string>() << '\n';
  out << "y(" << var << ") = " << j["y"].get<std::string>() << '\n';
  out << "dx/d" << var << " = " << j["dxdt"].get<std::string>() << '\n';
  out << "anchor: " << point_text(param.anchor()) << '\n';
  const double tp = param.anchor_parameter();
  out << "anchor parameter: " << (std::isnan(tp) ? "undefined" : std::isinf(tp) ? "infinity" : num(tp)) << '\n';
  out << "domain: " << param.domain_note() << '\n';
  return kExitOk;
}

int cmd_substitute(const Options& o, std::ostream& out) {
  const Expr e = parse_expr(o.expr);
  const Parameterization param = single_param(o);
  const RatFunc g = integrand_in_t(e, param);
  if (o.format == "json") {
    print_json(out, Json{{"method", param.method().to_string()},
                         {"expr", render(e)},
                         {"radicand", param.radicand().to_string()},
                         {"integrand", g.to_string("t")}});
    return kExitOk;
  }
  out << "R(x(t), y(t)) * dx/dt = " << g.to_string("t") << '\n';
  return kExitOk;
}

double endpoint(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_rational(text, flag).to_double();
}

int cmd_integrate(const Options& o, std::ostream& out, std::ostream& err) {
  const Expr e = parse_expr(o.expr);
  const Parameterization param = single_param(o);
  const double lo = endpoint(o.from, "--from");
  const double hi = endpoint(o.to, "--to");
  const Sign branch = parse_branch(o.branch);
  const QuadratureConfig cfg = quadrature(o);
  const double sub = substituted_integral(e, param, lo, hi, branch, cfg);
  const double direct = direct_integral(e, param.conic(), lo, hi, branch, cfg);
  const double dev = std::abs(sub - direct);
  const bool ok = dev < o.tolerance;
  if (o.format == "json") {
    print_json(out, Json{{"method", param.method().to_string()},
                         {"expr", render(e)},
                         {"from", o.from},
                         {"to", o.to},
                         {"branch", o.branch},
                         {"substituted", sub},
                         {"direct", direct},
                         {"deviation", dev},
                         {"tolerance", o.tolerance},
                         {"within_tolerance", ok}});
  } else {
    out << "substituted: " << num(sub) << '\n';
    out << "direct: " << num(direct) << '\n';
    out << "deviation: " << num(dev) << '\n';
    out << "tolerance: " << num(o.tolerance) << '\n';
  }
  if (!ok) {
    err << "error: " << error_name(ErrorCode::ToleranceExceeded) << ": |substituted - direct| = " << num(dev)
        << " is not below " << num(o.tolerance) << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Expr e = parse_expr(o.expr);
  const Conic conic = parse_conic(o);
  std::vector<Method> methods;
  for (const std::string& m : o.methods) methods.push_back(parse_method(m));
  if (methods.empty()) methods = standard_methods();
  const double lo = endpoint(o.from, "--from");
  const double hi = endpoint(o.to, "--to");
  const CrossCheckReport report = cross_method_check(e, conic, lo, hi, methods, parse_branch(o.branch), quadrature(o));
  if (o.format == "json") {
    print_json(out, report_json(report));
  } else {
    out << "direct: " << (report.direct ? num(*report.direct) : "error " + std::string(error_name(*report.direct_error)))
        << '\n';
    for (const MethodOutcome& m : report.methods) {
      out << m.method.to_string() << ": ";
      if (m.value)
        out << num(*m.value) << '\n';
      else
        out << "error " << error_name(*m.error) << '\n';
    }
    out << "max deviation: " << num(report.max_deviation) << '\n';
    out << "direct deviation: " << num(report.direct_deviation) << '\n';
  }
  const double worst = std::max(report.max_deviation, report.direct_deviation);
  if (!(worst < o.tolerance)) {
    err << "error: " << error_name(ErrorCode::ToleranceExceeded) << ": deviation " << num(worst)
        << " is not below " << num(o.tolerance) << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_plot(const Options& o, std::ostream& out, std::ostream& err) {
  const Parameterization param = single_param(o);
  const PlotResult plot = plot_svg(param);
  if (o.output.empty()) {
    out << plot.svg;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw UsageError("cannot write " + o.output);
    file << plot.svg;
  }
  for (const std::string& note : plot.notices) err << "note: " << note << '\n';
  if (!o.output.empty()) {
    if (o.format == "json")
      print_json(out, Json{{"output", o.output}, {"chords", plot.chords}, {"notices", plot.notices}});
    else
      out << "wrote " << o.output << " (" << plot.chords << " chords)\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Euler substitutions for integrals of R(x, sqrt(a x^2 + b x + c))", "eulersub"};
  app.require_subcommand(1);

  auto coefficients = [&](CLI::App* sub) {
    sub->add_option("-a", o.a, "coefficient a (rational, e.g. -3/2)")->required();
    sub->add_option("-b", o.b, "coefficient b")->required();
    sub->add_option("-c", o.c, "coefficient c")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto quadrature_flags = [&](CLI::App* sub) {
    sub->add_option("--tolerance", o.tolerance, "maximum accepted deviation")->check(CLI::PositiveNumber);
    sub->add_option("--nodes", o.nodes, "Gauss-Legendre nodes per panel (2..128)");
    sub->add_option("--panels", o.panels, "number of panels");
  };
  auto interval = [&](CLI::App* sub) {
    sub->add_option("-e,--expr", o.expr, "integrand R(x, y), y = sqrt(a x^2 + b x + c)")->required();
    sub->add_option("--from", o.from, "lower limit (rational or decimal)")->required();
    sub->add_option("--to", o.to, "upper limit (rational or decimal)")->required();
    sub->add_option("--branch", o.branch, "sign of y on the interval: + or -");
  };

  CLI::App* classify = app.add_subcommand("classify", "conic type, canonical form and characteristic points");
  coefficients(classify);

  CLI::App* param = app.add_subcommand("parametrize", "x(t), y(t) and dx/dt for one method");
  coefficients(param);
  param->add_option("-m,--method", o.methods, "substitution method")->required()->expected(1);

  CLI::App* subst = app.add_subcommand("substitute", "rationalized integrand R(x(t), y(t)) * dx/dt");
  coefficients(subst);
  subst->add_option("-m,--method", o.methods, "substitution method")->required()->expected(1);
  subst->add_option("-e,--expr", o.expr, "integrand R(x, y)")->required();

  CLI::App* integ = app.add_subcommand("integrate", "integrate via one substitution and compare with the direct oracle");
  coefficients(integ);
  integ->add_option("-m,--method", o.methods, "substitution method")->required()->expected(1);
  interval(integ);
  quadrature_flags(integ);

  CLI::App* check = app.add_subcommand("check", "integrate with several methods and report their agreement");
  coefficients(check);
  check->add_option("-m,--method", o.methods, "methods to compare (repeatable; default: all)");
  interval(check);
  quadrature_flags(check);

  CLI::App* plot = app.add_subcommand("plot", "SVG of the conic and the chord pencil");
  coefficients(plot);
  plot->add_option("-m,--method", o.methods, "substitution method")->required()->expected(1);
  plot->add_option("-o,--output", o.output, "SVG path (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(o, out);
    if (param->parsed()) return cmd_parametrize(o, out);
    if (subst->parsed()) return cmd_substitute(o, out);
    if (integ->parsed()) return cmd_integrate(o, out, err);
    if (check->parsed()) return cmd_check(o, out, err);
    if (plot->parsed()) return cmd_plot(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace eulersub::cli
