#pragma once

#include <optional>
#include <string_view>

#include "eulersub/quad_num.hpp"

namespace eulersub {

/// The curve y^2 = a x^2 + b x + c, sorted by (sign a, sign discriminant, b != 0).
enum class ConicClass {
  EmptySet,
  SinglePoint,
  Ellipse,
  Parabola,
  PairOfLines,
  HyperbolaVerticesOnVerticalLine,
  HyperbolaVerticesOnXAxis,
  DegenerateLinear,  // a = b = 0: y^2 = c
};

std::string_view to_string(ConicClass tag);

/// y^2 = a (x - p)^2 + q
struct CanonicalForm {
  Rational p;
  Rational q;
};

/// A point of the curve; both coordinates live in the same field Q(sqrt(d)).
struct CurvePoint {
  QuadNum x;
  QuadNum y;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/**
 * Natural anchors for chord parameterizations. Index 1 is the lower point
 * (y <= 0), index 2 the upper one, except for R where the index follows the
 * root formula x_{1,2} = (-b +- sqrt(disc)) / (2a).
 */
struct CharacteristicPoints {
  std::optional<CurvePoint> m1, m2;  // (p, -+sqrt(q)), q > 0
  std::optional<CurvePoint> v1, v2;  // (0, -+sqrt(c)), c >= 0
  std::optional<CurvePoint> r1, r2;  // (x_{1,2}, 0), a != 0 and disc >= 0

  int count() const {
    return int(m1.has_value()) + int(m2.has_value()) + int(v1.has_value()) +
           int(v2.has_value()) + int(r1.has_value()) + int(r2.has_value());
  }
};

class Conic {
 public:
  Conic(Rational a, Rational b, Rational c);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  /// b^2 - 4ac
  const Rational& discriminant() const noexcept { return discriminant_; }

  ConicClass classify() const;
  /// Throws ParabolicCase when a = 0.
  CanonicalForm canonical_form() const;
  CharacteristicPoints characteristic_points() const;

  /// a x^2 + b x + c
  Rational value_at(const Rational& x) const { return (a_ * x + b_) * x + c_; }
  QuadNum value_at(const QuadNum& x) const;
  double value_at(double x) const;

  /// Exact test of y^2 == a x^2 + b x + c.
  bool contains(const CurvePoint& point) const;

 private:
  Rational a_, b_, c_, discriminant_;
};

ConicClass classify(const Rational& a, const Rational& b, const Rational& c);
CanonicalForm canonical_form(const Rational& a, const Rational& b, const Rational& c);
CharacteristicPoints characteristic_points(const Rational& a, const Rational& b, const Rational& c);

}  // namespace eulersub
