#include "eulersub/substitution.hpp"

#include <cmath>
#include <limits>

#include "eulersub/error.hpp"

namespace eulersub {

// ---------------------------------------------------------------------------
// Method strings

Method Method::parse(std::string_view text) {
  auto bad = [&]() -> Method {
    throw Error(ErrorCode::InvalidArgument,
                "unknown method '" + std::string(text) +
                    "' (expected euler1+|euler1-|euler2+|euler2-|euler3:1|euler3:2|"
                    "euler4+|euler4-|point:<x0>:+|point:<x0>:-|original|tau|trig)");
  };
  if (text == "euler1+") return euler1(Sign::Plus);
  if (text == "euler1-") return euler1(Sign::Minus);
  if (text == "euler2+") return euler2(Sign::Plus);
  if (text == "euler2-") return euler2(Sign::Minus);
  if (text == "euler3:1") return euler3(1);
  if (text == "euler3:2") return euler3(2);
  if (text == "euler4+") return euler4(Sign::Plus);
  if (text == "euler4-") return euler4(Sign::Minus);
  if (text == "original") return original();
  if (text == "tau") return tau();
  if (text == "trig") return trig();
  constexpr std::string_view prefix = "point:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view rest = text.substr(prefix.size());
    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos || colon + 2 != rest.size()) return bad();
    const char s = rest.back();
    if (s != '+' && s != '-') return bad();
    Rational x0;
    try {
      x0 = Rational::parse(rest.substr(0, colon));
    } catch (const Error&) {
      return bad();
    }
    return point(x0, s == '+' ? Sign::Plus : Sign::Minus);
  }
  return bad();
}

std::string Method::to_string() const {
  const char* s = sign == Sign::Plus ? "+" : "-";
  switch (kind) {
    case MethodKind::Euler1: return std::string("euler1") + s;
    case MethodKind::Euler2: return std::string("euler2") + s;
    case MethodKind::Euler3: return "euler3:" + std::to_string(root_index);
    case MethodKind::Euler4: return std::string("euler4") + s;
    case MethodKind::GenericPoint: return "point:" + x0.to_string() + ":" + s;
    case MethodKind::OriginalEuler: return "original";
    case MethodKind::Tau: return "tau";
    case MethodKind::TrigHyperbolic: return "trig";
  }
  return "?";
}

std::vector<Method> standard_methods() {
  return {Method::euler1(Sign::Plus), Method::euler1(Sign::Minus), Method::euler2(Sign::Plus),
          Method::euler2(Sign::Minus), Method::euler3(1),          Method::euler3(2),
          Method::euler4(Sign::Plus), Method::euler4(Sign::Minus), Method::original(),
          Method::tau(),              Method::trig()};
}

// ---------------------------------------------------------------------------
// Construction helpers

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorCode::PreconditionViolated, what);
}

RatFunc constant(const QuadNum& v, const Rational& d) { return RatFunc::constant(v, d); }
RatFunc constant(const Rational& v, const Rational& d) {
  return RatFunc::constant(QuadNum::rational(v, d), d);
}

/// Polynomial from QuadNum coefficients, ascending degree.
Poly poly(std::initializer_list<QuadNum> coeffs, const Rational& d) {
  return Poly(std::vector<QuadNum>(coeffs), d);
}

QuadNum rat(const Rational& v, const Rational& d) { return QuadNum::rational(v, d); }

/// Parameter value where (x(t), y(t)) reaches the anchor: the common root of
/// x(t) - x0 and y(t) - y0. No common root means the anchor sits at t = inf.
double anchor_limit(const RatFunc& x, const RatFunc& y, const CurvePoint& anchor) {
  const Rational& d = x.radicand();
  const QuadNum x0 = anchor.x.with_radicand(d);
  const QuadNum y0 = anchor.y.with_radicand(d);
  const Poly px = x.numerator() - x.denominator() * x0;
  const Poly py = y.numerator() - y.denominator() * y0;
  if (px.is_zero() && py.is_zero()) return kNaN;
  const Poly g = poly_gcd(px, py);
  if (g.degree() == 0) return kInf;
  if (g.degree() == 1) return (-g.coeff(0) / g.coeff(1)).to_double();
  return kNaN;
}

}  // namespace

class ParameterizationBuilder {
 public:
  static Parameterization exact(const Method& method, const Conic& conic, RatFunc x, RatFunc y,
                                std::optional<CurvePoint> anchor, std::string note) {
    Parameterization p(method, conic);
    p.radicand_ = x.radicand();
    p.exact_ = true;
    p.dxdt_ = x.derivative();
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    p.numeric_x_ = p.x_.to_numeric();
    p.numeric_y_ = p.y_.to_numeric();
    p.numeric_dxdt_ = p.dxdt_.to_numeric();
    p.anchor_parameter_ = anchor ? anchor_limit(p.x_, p.y_, *anchor) : kNaN;
    set_anchor(p, std::move(anchor));
    p.domain_note_ = std::move(note);
    return p;
  }

  static Parameterization numeric(const Method& method, const Conic& conic, NumericRatFunc x,
                                  NumericRatFunc y, std::optional<CurvePoint> anchor,
                                  double anchor_parameter, std::string note) {
    Parameterization p(method, conic);
    p.exact_ = false;
    p.numeric_dxdt_ = x.derivative();
    p.numeric_x_ = std::move(x);
    p.numeric_y_ = std::move(y);
    p.anchor_parameter_ = anchor_parameter;
    set_anchor(p, std::move(anchor));
    p.domain_note_ = std::move(note);
    return p;
  }

  static void set_trig(Parameterization& p, TrigCase c, Rational radicand) {
    p.trig_case_ = c;
    p.radicand_ = std::move(radicand);
  }

  static void set_anchor_parameter(Parameterization& p, double value) { p.anchor_parameter_ = value; }

 private:
  static void set_anchor(Parameterization& p, std::optional<CurvePoint> anchor) {
    if (anchor) p.numeric_anchor_ = {anchor->x.to_double(), anchor->y.to_double()};
    p.anchor_ = std::move(anchor);
  }
};

// ---------------------------------------------------------------------------
// The substitutions

Parameterization euler1(const Conic& conic, Sign sign) {
  const Rational& a = conic.a();
  const Rational& b = conic.b();
  const Rational& c = conic.c();
  if (a.sign() <= 0) precondition("euler1 requires a > 0");
  const Rational& d = a;
  const QuadNum sa = QuadNum::sqrt_of(a);
  const Rational s = sign_factor(sign);

  // x = (t^2 - c) / (b -+ 2 t sqrt(a)),  y = (-+t^2 sqrt(a) + t b -+ c sqrt(a)) / (same)
  const Poly den = poly({rat(b, d), sa * (Rational(-2) * s)}, d);
  const Poly xnum = poly({rat(-c, d), rat(0, d), rat(1, d)}, d);
  const Poly ynum = poly({sa * (-s * c), rat(b, d), sa * (-s)}, d);
  return ParameterizationBuilder::exact(Method::euler1(sign), conic, RatFunc::normalize(xnum, den),
                                        RatFunc::normalize(ynum, den), std::nullopt,
                                        "chords parallel to the asymptote y = " +
                                            std::string(sign == Sign::Plus ? "+" : "-") +
                                            "x sqrt(a); pole where b = " +
                                            std::string(sign == Sign::Plus ? "+" : "-") +
                                            "2 t sqrt(a)");
}

Parameterization euler2(const Conic& conic, Sign sign) {
  const Rational& a = conic.a();
  const Rational& b = conic.b();
  const Rational& c = conic.c();
  if (c.sign() <= 0) precondition("euler2 requires c > 0");
  const Rational& d = c;
  const QuadNum sc = QuadNum::sqrt_of(c);
  const Rational s = sign_factor(sign);

  // x = (b -+ 2 t sqrt(c)) / (t^2 - a),  y = (b t -+ (t^2 + a) sqrt(c)) / (t^2 - a)
  const Poly den = Poly::from_rationals({-a, 0, 1}, d);
  const Poly xnum = poly({rat(b, d), sc * (Rational(-2) * s)}, d);
  const Poly ynum = poly({sc * (-s * a), rat(b, d), sc * (-s)}, d);
  const CurvePoint anchor{rat(0, d), sc * s};
  return ParameterizationBuilder::exact(Method::euler2(sign), conic, RatFunc::normalize(xnum, den),
                                        RatFunc::normalize(ynum, den), anchor,
                                        "chords through V" + std::string(sign == Sign::Plus ? "2" : "1") +
                                            " = (0, " + (sc * s).to_string() + ")");
}

Parameterization euler3(const Conic& conic, int root_index) {
  const Rational& a = conic.a();
  const Rational& b = conic.b();
  const Rational& disc = conic.discriminant();
  if (root_index != 1 && root_index != 2) throw Error(ErrorCode::InvalidArgument, "euler3 root index must be 1 or 2");
  if (a.is_zero()) precondition("euler3 requires a != 0");
  if (disc.sign() <= 0) precondition("euler3 requires a positive discriminant (two distinct real roots)");
  const Rational& d = disc;
  const QuadNum sd = QuadNum::sqrt_of(disc);
  const Rational inv_2a = (Rational(2) * a).inverse();
  const QuadNum r_plus = (rat(-b, d) + sd) * inv_2a;
  const QuadNum r_minus = (rat(-b, d) - sd) * inv_2a;
  const QuadNum& x1 = root_index == 1 ? r_plus : r_minus;
  const QuadNum& x2 = root_index == 1 ? r_minus : r_plus;

  // x = (t^2 x1 - a x2) / (t^2 - a),  y = (x1 - x2) a t / (t^2 - a)
  const Poly den = Poly::from_rationals({-a, 0, 1}, d);
  const Poly xnum = poly({x2 * (-a), rat(0, d), x1}, d);
  const Poly ynum = poly({rat(0, d), (x1 - x2) * a}, d);
  const CurvePoint anchor{x1, rat(0, d)};
  return ParameterizationBuilder::exact(Method::euler3(root_index), conic,
                                        RatFunc::normalize(xnum, den), RatFunc::normalize(ynum, den),
                                        anchor, "chords through R" + std::to_string(root_index) + " = (" +
                                                    x1.to_string() + ", 0)");
}

Parameterization euler4(const Conic& conic, Sign sign) {
  const Rational& a = conic.a();
  if (a.is_zero()) precondition("euler4 requires a != 0");
  const CanonicalForm cf = conic.canonical_form();
  if (cf.q.sign() <= 0) precondition("euler4 requires q = -disc/(4a) > 0");
  const Rational& d = cf.q;
  const QuadNum sq = QuadNum::sqrt_of(cf.q);
  const Rational s = sign_factor(sign);

  // x = p +- 2 t sqrt(q) / (a - t^2),  y = +-(a + t^2) sqrt(q) / (a - t^2)
  const Poly den = Poly::from_rationals({a, 0, -1}, d);
  const RatFunc x = constant(cf.p, d) + RatFunc::normalize(poly({rat(0, d), sq * (Rational(2) * s)}, d), den);
  const RatFunc y = RatFunc::normalize(poly({sq * (s * a), rat(0, d), sq * s}, d), den);
  const CurvePoint anchor{rat(cf.p, d), sq * s};
  return ParameterizationBuilder::exact(Method::euler4(sign), conic, x, y, anchor,
                                        "chords through M" + std::string(sign == Sign::Plus ? "2" : "1") +
                                            " = (" + cf.p.to_string() + ", " + (sq * s).to_string() + ")");
}

Parameterization generic_point(const Conic& conic, const Rational& x0, Sign sign) {
  const Rational& a = conic.a();
  const Rational& b = conic.b();
  const Rational r = conic.value_at(x0);
  if (r.sign() < 0) precondition("a x0^2 + b x0 + c must be >= 0 for x0 = " + x0.to_string());
  const Rational& d = r;
  const QuadNum y0 = QuadNum::sqrt_of(r) * sign_factor(sign);
  const QuadNum qx0 = rat(x0, d);

  // x = (x0 t^2 - 2 y0 t + a x0 + b) / (t^2 - a)
  // y = (-y0 t^2 + (2 a x0 + b) t - a y0) / (t^2 - a)
  const Poly den = Poly::from_rationals({-a, 0, 1}, d);
  const Poly xnum = poly({rat(a * x0 + b, d), y0 * Rational(-2), qx0}, d);
  const Poly ynum = poly({y0 * (-a), rat(Rational(2) * a * x0 + b, d), -y0}, d);
  const CurvePoint anchor{qx0, y0};
  return ParameterizationBuilder::exact(Method::point(x0, sign), conic, RatFunc::normalize(xnum, den),
                                        RatFunc::normalize(ynum, den), anchor,
                                        "chords through P0 = (" + x0.to_string() + ", " + y0.to_string() + ")");
}

Parameterization original_euler(const Conic& conic) {
  const Rational& a = conic.a();
  const Rational& b = conic.b();
  const Rational& c = conic.c();
  if (a.sign() <= 0 || c.sign() <= 0) precondition("original Euler substitution requires a > 0 and c > 0");
  const Rational& d = a;
  const QuadNum sa = QuadNum::sqrt_of(a);

  // y = x sqrt(a) - t sqrt(c) with s = t sqrt(c/a):  y = sqrt(a) (x - s)
  // x = (a s^2 - c) / (b + 2 a s),  y = sqrt(a) (-a s^2 - b s - c) / (b + 2 a s)
  const Poly den = Poly::from_rationals({b, Rational(2) * a}, d);
  const Poly xnum = Poly::from_rationals({-c, 0, a}, d);
  const Poly ynum = poly({sa * (-c), sa * (-b), sa * (-a)}, d);
  return ParameterizationBuilder::exact(Method::original(), conic, RatFunc::normalize(xnum, den),
                                        RatFunc::normalize(ynum, den), std::nullopt,
                                        "parameter s = t sqrt(c/a) for the relation y = x sqrt(a) - t sqrt(c)");
}

Parameterization tau_reparam(const Conic& conic) {
  const Rational& a = conic.a();
  const Rational& b = conic.b();
  const Rational& disc = conic.discriminant();
  if (a.sign() <= 0) precondition("tau reparameterization requires a > 0");
  const Rational& d = a;
  const QuadNum sa = QuadNum::sqrt_of(a);
  const Rational four_a = Rational(4) * a;

  // x = -(tau + disc/tau + 2b) / (4a),  y = (tau - disc/tau) / (4 sqrt(a))
  const Poly den = Poly::from_rationals({0, four_a}, d);
  const Poly xnum = Poly::from_rationals({-disc, Rational(-2) * b, -1}, d);
  const Poly ynum = poly({sa * (-disc), rat(0, d), sa}, d);
  return ParameterizationBuilder::exact(Method::tau(), conic, RatFunc::normalize(xnum, den),
                                        RatFunc::normalize(ynum, den), std::nullopt,
                                        "tau = 2 t sqrt(a) - b over euler1+; tau = 0 is an asymptote");
}

Parameterization trig_param(const Conic& conic) {
  const Rational& a = conic.a();
  if (a.is_zero()) precondition("trigonometric substitution requires a != 0");
  const CanonicalForm cf = conic.canonical_form();
  if (cf.q.is_zero()) precondition("trigonometric substitution requires q != 0");
  const int sa = a.sign();
  const int sq = cf.q.sign();
  if (sa < 0 && sq < 0) throw Error(ErrorCode::NoRealPoints, "a < 0 and q < 0: the curve has no real points");

  const TrigCase kind = sa < 0 ? TrigCase::Circle : (sq > 0 ? TrigCase::Sinh : TrigCase::Cosh);
  const Rational abs_a = a.abs();
  const Rational abs_q = cf.q.abs();

  // Half-angle forms (xi(u), eta(u)) as ascending coefficient lists sharing one denominator.
  std::vector<long> xi_num, eta_num, den;
  switch (kind) {
    case TrigCase::Circle: xi_num = {1, 0, -1}; eta_num = {0, 2}; den = {1, 0, 1}; break;
    case TrigCase::Sinh: xi_num = {0, 2}; eta_num = {1, 0, 1}; den = {1, 0, -1}; break;
    case TrigCase::Cosh: xi_num = {1, 0, 1}; eta_num = {0, 2}; den = {1, 0, -1}; break;
  }
  const char* note = kind == TrigCase::Circle ? "xi = cos, eta = sin, u = tan(theta/2)"
                     : kind == TrigCase::Sinh ? "xi = sinh, eta = cosh, u = tanh(theta/2)"
                                              : "xi = cosh, eta = sinh, u = tanh(theta/2)";

  // Anchor: the point sent to u = inf.
  // Circle/cosh: (xi, eta) = (-1, 0);  sinh: (0, -1).
  const Rational scale1_sq = abs_q / abs_a;  // (x - p) = xi * sqrt(|q|/|a|)

  if (auto root_a = abs_a.exact_sqrt()) {
    const Rational& d = abs_q;
    const QuadNum s2 = QuadNum::sqrt_of(abs_q);
    const QuadNum s1 = s2 * root_a->inverse();
    const CurvePoint anchor = kind == TrigCase::Sinh
                                  ? CurvePoint{rat(cf.p, d), -s2}
                                  : CurvePoint{rat(cf.p, d) - s1, rat(0, d)};
    auto to_poly = [&](const std::vector<long>& cs) {
      std::vector<QuadNum> out;
      for (long v : cs) out.push_back(rat(Rational(v), d));
      return Poly(std::move(out), d);
    };
    const RatFunc xi = RatFunc::normalize(to_poly(xi_num), to_poly(den));
    const RatFunc eta = RatFunc::normalize(to_poly(eta_num), to_poly(den));
    const RatFunc x = constant(cf.p, d) + xi * constant(s1, d);
    const RatFunc y = eta * constant(s2, d);
    Parameterization p =
        ParameterizationBuilder::exact(Method::trig(), conic, x, y, anchor, note);
    ParameterizationBuilder::set_trig(p, kind, d);
    ParameterizationBuilder::set_anchor_parameter(p, kInf);
    return p;
  }

  const CurvePoint anchor =
      kind == TrigCase::Sinh
          ? CurvePoint{rat(cf.p, abs_q), -QuadNum::sqrt_of(abs_q)}
          : CurvePoint{rat(cf.p, scale1_sq) - QuadNum::sqrt_of(scale1_sq), rat(0, scale1_sq)};
  const double s1 = std::sqrt(scale1_sq.to_double());
  const double s2 = std::sqrt(abs_q.to_double());
  const double p0 = cf.p.to_double();
  auto to_numeric = [](const std::vector<long>& cs, double scale) {
    NumericPoly out;
    for (long v : cs) out.coeffs.push_back(static_cast<double>(v) * scale);
    return out;
  };
  const NumericPoly nd = to_numeric(den, 1.0);
  NumericRatFunc x{to_numeric(xi_num, s1) + to_numeric(den, p0), nd};
  NumericRatFunc y{to_numeric(eta_num, s2), nd};
  Parameterization p = ParameterizationBuilder::numeric(Method::trig(), conic, std::move(x), std::move(y),
                                                        anchor, kInf, note);
  ParameterizationBuilder::set_trig(p, kind, abs_q);
  return p;
}

Parameterization parametrize(const Conic& conic, const Method& method) {
  switch (method.kind) {
    case MethodKind::Euler1: return euler1(conic, method.sign);
    case MethodKind::Euler2: return euler2(conic, method.sign);
    case MethodKind::Euler3: return euler3(conic, method.root_index);
    case MethodKind::Euler4: return euler4(conic, method.sign);
    case MethodKind::GenericPoint: return generic_point(conic, method.x0, method.sign);
    case MethodKind::OriginalEuler: return original_euler(conic);
    case MethodKind::Tau: return tau_reparam(conic);
    case MethodKind::TrigHyperbolic: return trig_param(conic);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method kind");
}

// ---------------------------------------------------------------------------
// Accessors and inverse maps

const RatFunc& Parameterization::x_of_t() const {
  if (!exact_) throw Error(ErrorCode::InexactParameterization, "parameterization has numeric coefficients");
  return x_;
}

const RatFunc& Parameterization::y_of_t() const {
  if (!exact_) throw Error(ErrorCode::InexactParameterization, "parameterization has numeric coefficients");
  return y_;
}

const RatFunc& Parameterization::dxdt() const {
  if (!exact_) throw Error(ErrorCode::InexactParameterization, "parameterization has numeric coefficients");
  return dxdt_;
}

QuadNum Parameterization::t_from_point(const QuadNum& x_in, const QuadNum& y_in) const {
  if (!exact_)
    throw Error(ErrorCode::InexactParameterization, "exact inverse needs an exact parameterization");
  const Rational& d = radicand_;
  const QuadNum x = x_in.with_radicand(d);
  const QuadNum y = y_in.with_radicand(d);
  const Rational& a = conic_.a();
  const Rational& b = conic_.b();

  auto slope = [&](const QuadNum& num, const QuadNum& den) {
    if (den.is_zero())
      throw Error(ErrorCode::AnchorPoint,
                  num.is_zero() ? "point is the anchor; it has no finite slope parameter"
                                : "point lies on the vertical line through the anchor (t = infinity)");
    return num / den;
  };

  switch (method_.kind) {
    case MethodKind::Euler1:
      return y - QuadNum::sqrt_of(a).with_radicand(d) * sign_factor(method_.sign) * x;
    case MethodKind::OriginalEuler:
      return x - y * QuadNum::sqrt_of(a).with_radicand(d) * a.inverse();
    case MethodKind::Tau: {
      const QuadNum sa = QuadNum::sqrt_of(a).with_radicand(d);
      return sa * Rational(2) * y - x * (Rational(2) * a) - rat(b, d);
    }
    case MethodKind::Euler2:
    case MethodKind::Euler3:
    case MethodKind::Euler4:
    case MethodKind::GenericPoint:
      return slope(y - anchor_->y, x - anchor_->x);
    case MethodKind::TrigHyperbolic: {
      const CanonicalForm cf = conic_.canonical_form();
      const QuadNum s2 = QuadNum::sqrt_of(cf.q.abs()).with_radicand(d);
      const QuadNum s1 = s2 * a.abs().exact_sqrt()->inverse();
      const QuadNum xi = (x - rat(cf.p, d)) / s1;
      const QuadNum eta = y / s2;
      const QuadNum one = rat(1, d);
      if (*trig_case_ == TrigCase::Sinh) return slope(xi, one + eta);
      return slope(eta, one + xi);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method kind");
}

double Parameterization::t_from_point(double x, double y) const {
  const double a = conic_.a().to_double();
  const double b = conic_.b().to_double();

  auto slope = [&](double num, double den, double scale) {
    const double tol = 1e-12 * scale;
    if (std::abs(den) <= tol) {
      if (std::abs(num) <= tol)
        throw Error(ErrorCode::AnchorPoint, "point is the anchor; it has no finite slope parameter");
      return kInf;
    }
    return num / den;
  };

  switch (method_.kind) {
    case MethodKind::Euler1: return y - sign_value(method_.sign) * std::sqrt(a) * x;
    case MethodKind::OriginalEuler: return x - y / std::sqrt(a);
    case MethodKind::Tau: return 2.0 * std::sqrt(a) * y - 2.0 * a * x - b;
    case MethodKind::Euler2:
    case MethodKind::Euler3:
    case MethodKind::Euler4:
    case MethodKind::GenericPoint: {
      const auto [x0, y0] = numeric_anchor_;
      const double scale = 1.0 + std::abs(x) + std::abs(y) + std::abs(x0) + std::abs(y0);
      return slope(y - y0, x - x0, scale);
    }
    case MethodKind::TrigHyperbolic: {
      const CanonicalForm cf = conic_.canonical_form();
      const double s2 = std::sqrt(cf.q.abs().to_double());
      const double s1 = std::sqrt((cf.q.abs() / conic_.a().abs()).to_double());
      const double xi = (x - cf.p.to_double()) / s1;
      const double eta = y / s2;
      const double scale = 1.0 + std::abs(xi) + std::abs(eta);
      if (*trig_case_ == TrigCase::Sinh) return slope(xi, 1.0 + eta, scale);
      return slope(eta, 1.0 + xi, scale);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method kind");
}

}  // namespace eulersub
