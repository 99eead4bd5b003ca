#include "eulersub/conic.hpp"

#include "eulersub/error.hpp"

namespace eulersub {

std::string_view to_string(ConicClass tag) {
  switch (tag) {
    case ConicClass::EmptySet: return "EmptySet";
    case ConicClass::SinglePoint: return "SinglePoint";
    case ConicClass::Ellipse: return "Ellipse";
    case ConicClass::Parabola: return "Parabola";
    case ConicClass::PairOfLines: return "PairOfLines";
    case ConicClass::HyperbolaVerticesOnVerticalLine: return "HyperbolaVerticesOnVerticalLine";
    case ConicClass::HyperbolaVerticesOnXAxis: return "HyperbolaVerticesOnXAxis";
    case ConicClass::DegenerateLinear: return "DegenerateLinear";
  }
  return "Unknown";
}

Conic::Conic(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      discriminant_(b_ * b_ - Rational(4) * a_ * c_) {}

ConicClass Conic::classify() const {
  const int sa = a_.sign();
  const int sd = discriminant_.sign();
  if (sa == 0) return b_.is_zero() ? ConicClass::DegenerateLinear : ConicClass::Parabola;
  if (sa < 0) {
    if (sd < 0) return ConicClass::EmptySet;
    if (sd == 0) return ConicClass::SinglePoint;
    return ConicClass::Ellipse;
  }
  if (sd < 0) return ConicClass::HyperbolaVerticesOnVerticalLine;
  if (sd == 0) return ConicClass::PairOfLines;
  return ConicClass::HyperbolaVerticesOnXAxis;
}

CanonicalForm Conic::canonical_form() const {
  if (a_.is_zero())
    throw Error(ErrorCode::ParabolicCase, "canonical form needs a != 0");
  return {-b_ / (Rational(2) * a_), -discriminant_ / (Rational(4) * a_)};
}

CharacteristicPoints Conic::characteristic_points() const {
  CharacteristicPoints pts;
  if (c_.sign() >= 0) {
    const QuadNum root = QuadNum::sqrt_of(c_);
    const QuadNum zero = QuadNum::rational(0, c_);
    pts.v1 = CurvePoint{zero, -root};
    pts.v2 = CurvePoint{zero, root};
  }
  if (!a_.is_zero()) {
    if (discriminant_.sign() >= 0) {
      const Rational& d = discriminant_;
      const QuadNum minus_b = QuadNum::rational(-b_, d);
      const QuadNum sqrt_d = QuadNum::sqrt_of(d);
      const Rational inv_2a = (Rational(2) * a_).inverse();
      const QuadNum zero = QuadNum::rational(0, d);
      pts.r1 = CurvePoint{(minus_b + sqrt_d) * inv_2a, zero};
      pts.r2 = CurvePoint{(minus_b - sqrt_d) * inv_2a, zero};
    }
    const CanonicalForm cf = canonical_form();
    if (cf.q.sign() > 0) {
      const QuadNum x = QuadNum::rational(cf.p, cf.q);
      const QuadNum root = QuadNum::sqrt_of(cf.q);
      pts.m1 = CurvePoint{x, -root};
      pts.m2 = CurvePoint{x, root};
    }
  }
  return pts;
}

QuadNum Conic::value_at(const QuadNum& x) const {
  const Rational& d = x.radicand();
  return (QuadNum::rational(a_, d) * x + QuadNum::rational(b_, d)) * x + QuadNum::rational(c_, d);
}

double Conic::value_at(double x) const {
  return (a_.to_double() * x + b_.to_double()) * x + c_.to_double();
}

bool Conic::contains(const CurvePoint& point) const {
  return point.y * point.y == value_at(point.x);
}

ConicClass classify(const Rational& a, const Rational& b, const Rational& c) {
  return Conic(a, b, c).classify();
}

CanonicalForm canonical_form(const Rational& a, const Rational& b, const Rational& c) {
  return Conic(a, b, c).canonical_form();
}

CharacteristicPoints characteristic_points(const Rational& a, const Rational& b, const Rational& c) {
  return Conic(a, b, c).characteristic_points();
}

}  // namespace eulersub
