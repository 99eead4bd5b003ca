#pragma once

#include <string>
#include <vector>

#include "eulersub/poly.hpp"

namespace eulersub {

/// Default magnitude below which a denominator counts as a pole.
inline constexpr double kDefaultPoleFloor = 1e-300;

/// Double-coefficient polynomial, ascending degree. Used on the quadrature hot path.
struct NumericPoly {
  std::vector<double> coeffs;

  double operator()(double t) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  NumericPoly derivative() const;
  friend NumericPoly operator*(const NumericPoly& lhs, const NumericPoly& rhs);
  friend NumericPoly operator-(const NumericPoly& lhs, const NumericPoly& rhs);
  friend NumericPoly operator+(const NumericPoly& lhs, const NumericPoly& rhs);
};

/// Numeric quotient num/den. No cancellation is attempted.
struct NumericRatFunc {
  NumericPoly num;
  NumericPoly den;

  /// Throws PoleEvaluation when |den(t)| < pole_floor.
  double eval(double t, double pole_floor = kDefaultPoleFloor) const;
  NumericRatFunc derivative() const;
};

/**
 * Quotient of polynomials over Q(sqrt(d)) in canonical form: fully cancelled,
 * monic denominator, zero stored as 0/1. Canonical forms compare equal iff the
 * functions are equal.
 */
class RatFunc {
 public:
  /// The zero function over Q(sqrt(radicand)).
  explicit RatFunc(Rational radicand = Rational(0));
  /// A polynomial, viewed as num/1.
  explicit RatFunc(Poly polynomial);

  /// Canonicalizes num/den. Throws DivisionByZero if den is the zero polynomial.
  static RatFunc normalize(Poly num, Poly den);
  static RatFunc constant(const QuadNum& value, const Rational& radicand);
  static RatFunc variable(const Rational& radicand);

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }
  const Rational& radicand() const noexcept { return num_.radicand(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

  RatFunc derivative() const;

  /// Throws PoleEvaluation when |den(t)| < pole_floor.
  double eval(double t, double pole_floor = kDefaultPoleFloor) const;
  /// Exact evaluation; a zero denominator throws PoleEvaluation.
  QuadNum eval(const QuadNum& t) const;

  NumericRatFunc to_numeric() const;

  /// "(N) / (D)" in the canonical polynomial rendering.
  std::string to_string(std::string_view var = "t") const;

  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

 private:
  RatFunc(Poly num, Poly den, int /*already canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

RatFunc ratfunc_normalize(Poly num, Poly den);
RatFunc ratfunc_derivative(const RatFunc& f);
double ratfunc_eval(const RatFunc& f, double t, double pole_floor = kDefaultPoleFloor);

/// f(g(t))
RatFunc compose(const RatFunc& outer, const RatFunc& inner);

/// True when num/den satisfies every canonical-form invariant.
bool is_canonical(const RatFunc& f);

}  // namespace eulersub
