#include "eulersub/verify.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>

namespace eulersub {

void QuadratureConfig::validate() const {
  if (nodes_per_panel < 2 || nodes_per_panel > 128)
    throw Error(ErrorCode::InvalidArgument,
                "nodes_per_panel must lie in [2, 128], got " + std::to_string(nodes_per_panel));
  if (panels < 1)
    throw Error(ErrorCode::InvalidArgument, "panels must be >= 1, got " + std::to_string(panels));
  if (!(pole_floor >= 0.0)) throw Error(ErrorCode::InvalidArgument, "pole_floor must be non-negative");
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Node {
  double x;
  double w;
};

// Nodes and weights on [-1, 1]; GSL tables are built once per order.
const std::vector<Node>& rule(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Node>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(static_cast<size_t>(n));
  if (!table) throw Error(ErrorCode::InvalidArgument, "GSL could not build a Gauss-Legendre table");
  std::vector<Node> nodes(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &nodes[i].x, &nodes[i].w, table);
  gsl_integration_glfixed_table_free(table);
  return cache.emplace(n, std::move(nodes)).first->second;
}

double radicand_at(const Conic& conic, double x) { return conic.value_at(x); }

double radicand_scale(const Conic& conic, double x) {
  return std::abs(conic.a().to_double()) * x * x + std::abs(conic.b().to_double() * x) +
         std::abs(conic.c().to_double());
}

// y on the requested branch, clamping rounding noise near the roots.
double branch_y(const Conic& conic, double x, Sign branch) {
  const double p = radicand_at(conic, x);
  const double scale = radicand_scale(conic, x);
  if (p < -1e-12 * std::max(scale, 1e-300))
    throw Error(ErrorCode::DomainViolation,
                "a x^2 + b x + c is negative at x = " + std::to_string(x) + " (value " + std::to_string(p) + ")");
  return sign_value(branch) * std::sqrt(std::max(p, 0.0));
}

// ax^2 + bx + c >= 0 on the whole closed interval, checked at the ends and the vertex.
void require_domain(const Conic& conic, double lo, double hi) {
  branch_y(conic, lo, Sign::Plus);
  branch_y(conic, hi, Sign::Plus);
  if (conic.a().sign() > 0) {
    const CanonicalForm cf = conic.canonical_form();
    const double p = cf.p.to_double();
    if (p > lo && p < hi && cf.q.sign() < 0)
      throw Error(ErrorCode::DomainViolation, "a x^2 + b x + c is negative at its vertex x = " + cf.p.to_string() +
                                                  ", inside the interval");
  }
}

double endpoint_parameter(const Parameterization& param, double x, double y) {
  try {
    return param.t_from_point(x, y);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::AnchorPoint) throw;
    const double limit = param.anchor_parameter();
    if (std::isnan(limit))
      throw Error(ErrorCode::AnchorPoint, "endpoint x = " + std::to_string(x) +
                                              " is the anchor and has no well-defined limit parameter");
    return limit;
  }
}

// f(t), with t = +-infinity read as the limit; nullopt at a pole.
std::optional<double> value_at(const NumericRatFunc& f, double t, double pole_floor) {
  if (std::isfinite(t)) {
    try {
      return f.eval(t, pole_floor);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  auto top = [](const NumericPoly& p) {
    int d = p.degree();
    while (d > 0 && p.coeffs[d] == 0.0) --d;
    return d;
  };
  const int dn = top(f.num);
  const int dd = top(f.den);
  if (dn > dd) return std::nullopt;
  if (dn < dd) return 0.0;
  return f.num.coeffs[dn] / f.den.coeffs[dd];
}

// The endpoint parameter must map back onto the endpoint. It does not when the
// requested piece lies on a line the substitution collapses to a single t, as
// happens on degenerate conics.
void require_maps_back(const Parameterization& param, double t, double x, double y, double pole_floor) {
  const auto px = value_at(param.numeric_x(), t, pole_floor);
  const auto py = value_at(param.numeric_y(), t, pole_floor);
  const double tol = 1e-7 * std::max({1.0, std::abs(x), std::abs(y)});
  if (!px || !py || std::abs(*px - x) > tol || std::abs(*py - y) > tol)
    throw Error(ErrorCode::ArcMismatch, "the endpoint (" + std::to_string(x) + ", " + std::to_string(y) +
                                            ") is not traced by the substitution near t = " + std::to_string(t));
}

double theta_of(double t) { return std::isinf(t) ? kPi : 2.0 * std::atan(t); }

bool is_infinity_angle(double theta) { return std::abs(std::remainder(theta - kPi, 2.0 * kPi)) < 1e-12; }

// A closed t-interval; nullopt bounds are infinite.
struct Piece {
  std::optional<double> lo;
  std::optional<double> hi;
};

// The t-set swept by theta in [min(th0, th1), max(th0, th1)], split where it crosses t = infinity.
std::vector<Piece> pieces_of_arc(double th0, double th1) {
  const double lo = std::min(th0, th1);
  const double hi = std::max(th0, th1);
  auto bound = [](double theta) -> std::optional<double> {
    if (is_infinity_angle(theta)) return std::nullopt;
    return std::tan(theta / 2.0);
  };
  std::vector<Piece> out;
  double start = lo;
  double cut = kPi + 2.0 * kPi * std::ceil((lo + 1e-12 - kPi) / (2.0 * kPi));
  for (; cut < hi - 1e-12; cut += 2.0 * kPi) {
    out.push_back({bound(start), std::nullopt});
    start = cut;
  }
  out.push_back({bound(start), bound(hi)});
  return out;
}

bool touches_infinity(const std::vector<Piece>& pieces) {
  return std::any_of(pieces.begin(), pieces.end(), [](const Piece& p) { return !p.lo || !p.hi; });
}

int poles_on(const Poly& den, const std::vector<Piece>& pieces) {
  if (den.degree() <= 0) return 0;
  int count = 0;
  for (const Piece& p : pieces) {
    std::optional<Rational> lo, hi;
    if (p.lo) lo = Rational::from_double(*p.lo);
    if (p.hi) hi = Rational::from_double(*p.hi);
    count += count_real_roots(den, lo, hi);
  }
  return count;
}

// How well the arc theta0 -> theta0 + delta traces the requested piece: the
// smallest normalized margin over interior samples (negative means off-piece).
double arc_margin(const Parameterization& param, double theta0, double delta, double x_lo, double x_hi,
                  Sign branch, double pole_floor) {
  const double lo = std::min(x_lo, x_hi);
  const double hi = std::max(x_lo, x_hi);
  const double sx = std::max({1.0, std::abs(lo), std::abs(hi)});
  const double sy = std::max({1.0, std::sqrt(radicand_scale(param.conic(), lo)),
                              std::sqrt(radicand_scale(param.conic(), hi))});
  double margin = kInf;
  for (double frac : {0.25, 0.5, 0.75}) {
    const double t = std::tan((theta0 + frac * delta) / 2.0);
    double x = 0.0, y = 0.0;
    try {
      x = param.numeric_x().eval(t, pole_floor);
      y = param.numeric_y().eval(t, pole_floor);
    } catch (const Error&) {
      return -kInf;
    }
    if (!std::isfinite(x) || !std::isfinite(y)) return -kInf;
    margin = std::min({margin, (x - lo) / sx, (hi - x) / sx, sign_value(branch) * y / sy});
  }
  return margin;
}

struct Integrand {
  std::function<double(double)> g;
  // Real poles on a set of t-pieces, and whether the integrand decays fast
  // enough at t = infinity to be integrable there.
  std::function<int(const std::vector<Piece>&)> poles;
  bool decays_at_infinity = true;
};

Integrand rationalized(const Expr& e, const Parameterization& param, double pole_floor) {
  Integrand out;
  if (param.exact()) {
    const RatFunc G = integrand_in_t(e, param);
    const NumericRatFunc numeric = G.to_numeric();
    // G is evaluated through x(t), y(t) and x'(t) rather than from its expanded
    // coefficients: near a high-order pole the expanded numerator and denominator
    // lose digits to cancellation, while the factors stay well conditioned. The
    // expanded form is the fallback at removable singularities of the factors.
    const NumericRatFunc x = param.numeric_x();
    const NumericRatFunc y = param.numeric_y();
    const NumericRatFunc dx = param.numeric_dxdt();
    out.g = [e, x, y, dx, numeric, pole_floor](double t) {
      try {
        const double v = evaluate<double>(e, x.eval(t, pole_floor), y.eval(t, pole_floor)) * dx.eval(t, pole_floor);
        if (std::isfinite(v)) return v;
      } catch (const Error&) {
      }
      try {
        return numeric.eval(t, pole_floor);
      } catch (const Error&) {
        throw Error(ErrorCode::NonFiniteEvaluation, "rationalized integrand has a pole at t = " + std::to_string(t));
      }
    };
    const Poly den = G.denominator();
    out.poles = [den](const std::vector<Piece>& pieces) { return poles_on(den, pieces); };
    out.decays_at_infinity = G.is_zero() || den.degree() - G.numerator().degree() >= 2;
    return out;
  }
  // Numeric coefficients: evaluate R directly at (x(u), y(u)).
  const NumericRatFunc x = param.numeric_x();
  const NumericRatFunc y = param.numeric_y();
  const NumericRatFunc dx = param.numeric_dxdt();
  out.g = [e, x, y, dx, pole_floor](double u) {
    try {
      return evaluate<double>(e, x.eval(u, pole_floor), y.eval(u, pole_floor)) * dx.eval(u, pole_floor);
    } catch (const Error&) {
      throw Error(ErrorCode::NonFiniteEvaluation, "integrand is not finite at u = " + std::to_string(u));
    }
  };
  // The hyperbolic half-angle forms blow up at u = +-1; the circle form has no real poles.
  std::vector<double> known;
  if (param.trig_case() && *param.trig_case() != TrigCase::Circle) known = {-1.0, 1.0};
  out.poles = [known](const std::vector<Piece>& pieces) {
    int count = 0;
    for (double pole : known)
      for (const Piece& p : pieces)
        if ((!p.lo || *p.lo <= pole) && (!p.hi || pole <= *p.hi)) ++count;
    return count;
  };
  return out;
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double lo, double hi, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(lo <= hi)) throw Error(ErrorCode::InvalidArgument, "gauss_legendre needs lo <= hi");
  const auto& nodes = rule(cfg.nodes_per_panel);
  const double width = (hi - lo) / cfg.panels;
  double total = 0.0;
  for (int k = 0; k < cfg.panels; ++k) {
    const double left = lo + k * width;
    const double mid = left + width / 2.0;
    double panel = 0.0;
    for (const Node& n : nodes) {
      const double x = mid + n.x * width / 2.0;
      const double v = f(x);
      if (!std::isfinite(v))
        throw Error(ErrorCode::NonFiniteEvaluation, "integrand is not finite at node " + std::to_string(x));
      panel += n.w * v;
    }
    total += panel * width / 2.0;
  }
  return total;
}

double direct_integral(const Expr& e, const Conic& conic, double x_lo, double x_hi, Sign branch,
                       const QuadratureConfig& cfg) {
  if (x_lo == x_hi) return 0.0;
  const double lo = std::min(x_lo, x_hi);
  const double hi = std::max(x_lo, x_hi);
  auto f = [&](double x) {
    const double y = branch_y(conic, x, branch);
    try {
      return evaluate<double>(e, x, y);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DivisionByZero) throw;
      throw Error(ErrorCode::NonFiniteEvaluation, "integrand divides by zero at x = " + std::to_string(x));
    }
  };
  const double value = gauss_legendre(f, lo, hi, cfg);
  return x_lo <= x_hi ? value : -value;
}

double substituted_integral(const Expr& e, const Parameterization& param, double x_lo, double x_hi, Sign branch,
                            const QuadratureConfig& cfg) {
  cfg.validate();
  const Conic& conic = param.conic();
  require_domain(conic, std::min(x_lo, x_hi), std::max(x_lo, x_hi));
  if (x_lo == x_hi) return 0.0;

  const double y_lo = branch_y(conic, x_lo, branch);
  const double y_hi = branch_y(conic, x_hi, branch);
  const double t_lo = endpoint_parameter(param, x_lo, y_lo);
  const double t_hi = endpoint_parameter(param, x_hi, y_hi);
  require_maps_back(param, t_lo, x_lo, y_lo, cfg.pole_floor);
  require_maps_back(param, t_hi, x_hi, y_hi, cfg.pole_floor);
  const Integrand integrand = rationalized(e, param, cfg.pole_floor);

  if (std::isfinite(t_lo) && std::isfinite(t_hi)) {
    const std::vector<Piece> plain{{std::min(t_lo, t_hi), std::max(t_lo, t_hi)}};
    if (integrand.poles(plain) > 0)
      throw Error(ErrorCode::PoleInInterval, "the rationalized integrand has a real pole in the parameter interval [" +
                                                 std::to_string(std::min(t_lo, t_hi)) + ", " +
                                                 std::to_string(std::max(t_lo, t_hi)) + "]");
  }

  const double th0 = theta_of(t_lo);
  const double th1 = theta_of(t_hi);
  const double direct = th1 - th0;
  if (direct == 0.0) return 0.0;
  const double around = direct > 0 ? direct - 2.0 * kPi : direct + 2.0 * kPi;

  const double m_direct = arc_margin(param, th0, direct, x_lo, x_hi, branch, cfg.pole_floor);
  const double m_around = arc_margin(param, th0, around, x_lo, x_hi, branch, cfg.pole_floor);
  const double delta = m_direct >= m_around ? direct : around;
  if (std::max(m_direct, m_around) < -1e-9)
    throw Error(ErrorCode::ArcMismatch, "neither parameter arc between t = " + std::to_string(t_lo) + " and t = " +
                                            std::to_string(t_hi) + " traces the requested piece of the curve");

  const std::vector<Piece> arc = pieces_of_arc(th0, th0 + delta);
  if (integrand.poles(arc) > 0)
    throw Error(ErrorCode::PoleInInterval, "the rationalized integrand has a real pole on the parameter arc");
  if (touches_infinity(arc) && !integrand.decays_at_infinity)
    throw Error(ErrorCode::PoleInInterval,
                "the parameter arc passes through t = infinity, where the integrand is not integrable");

  // t = tan(theta / 2), dt = (1 + t^2) / 2 dtheta.
  auto h = [&](double theta) {
    const double t = std::tan(theta / 2.0);
    return integrand.g(t) * (1.0 + t * t) / 2.0;
  };
  const double lo = std::min(th0, th0 + delta);
  const double hi = std::max(th0, th0 + delta);
  const double value = gauss_legendre(h, lo, hi, cfg);
  return delta > 0 ? value : -value;
}

CrossCheckReport cross_method_check(const Expr& e, const Conic& conic, double x_lo, double x_hi,
                                    const std::vector<Method>& methods, Sign branch, const QuadratureConfig& cfg) {
  cfg.validate();
  CrossCheckReport report;

  std::vector<std::future<MethodOutcome>> jobs;
  jobs.reserve(methods.size());
  for (const Method& m : methods) {
    jobs.push_back(std::async(std::launch::async, [&, m] {
      MethodOutcome out{m, std::nullopt, std::nullopt, {}};
      try {
        out.value = substituted_integral(e, parametrize(conic, m), x_lo, x_hi, branch, cfg);
      } catch (const Error& err) {
        out.error = err.code();
        out.message = err.what();
      }
      return out;
    }));
  }

  try {
    report.direct = direct_integral(e, conic, x_lo, x_hi, branch, cfg);
  } catch (const Error& err) {
    report.direct_error = err.code();
    report.direct_message = err.what();
  }

  for (auto& job : jobs) report.methods.push_back(job.get());

  for (std::size_t i = 0; i < report.methods.size(); ++i) {
    const auto& vi = report.methods[i].value;
    if (!vi) continue;
    if (report.direct) report.direct_deviation = std::max(report.direct_deviation, std::abs(*vi - *report.direct));
    for (std::size_t j = i + 1; j < report.methods.size(); ++j) {
      const auto& vj = report.methods[j].value;
      if (vj) report.max_deviation = std::max(report.max_deviation, std::abs(*vi - *vj));
    }
  }
  return report;
}

}  // namespace eulersub
