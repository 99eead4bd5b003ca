#pragma once

#include <ostream>
#include <string>

#include "eulersub/rational.hpp"

namespace eulersub {

/**
 * Element u + v*sqrt(d) of the quadratic extension Q(sqrt(d)).
 *
 * The radicand d >= 0 names the field; it is stored as given (not reduced to
 * squarefree form). When d is the square of a rational r the element is
 * collapsed to (u + v*r, 0), so v != 0 implies sqrt(d) is irrational.
 *
 * Arithmetic between elements of different radicands throws RadicandMismatch.
 */
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(Rational u, Rational v, Rational radicand);

  /// Rational u embedded in Q(sqrt(radicand)).
  static QuadNum rational(Rational u, Rational radicand = Rational(0)) {
    return QuadNum(std::move(u), Rational(0), std::move(radicand));
  }
  /// sqrt(radicand) itself, collapsed to a rational when radicand is a square.
  static QuadNum sqrt_of(Rational radicand) {
    return QuadNum(Rational(0), Rational(1), std::move(radicand));
  }

  const Rational& u() const noexcept { return u_; }
  const Rational& v() const noexcept { return v_; }
  const Rational& radicand() const noexcept { return d_; }

  bool is_zero() const noexcept { return u_.is_zero() && v_.is_zero(); }
  bool is_rational() const noexcept { return v_.is_zero(); }
  bool is_one() const { return v_.is_zero() && u_ == Rational(1); }

  /// Exact sign of the real number u + v*sqrt(d).
  int sign() const;
  double to_double() const;

  /// u - v*sqrt(d)
  QuadNum conjugate() const { return QuadNum(u_, -v_, d_, Normalized{}); }
  /// u^2 - d*v^2
  Rational norm() const { return u_ * u_ - d_ * v_ * v_; }

  QuadNum inverse() const;

  /// Same value and field; the radicand only matters when v != 0.
  QuadNum with_radicand(const Rational& radicand) const;

  /// "p/q" when rational, otherwise "(p/q + r/s*sqrt(d))" with zero parts omitted.
  std::string to_string() const;

  QuadNum& operator+=(const QuadNum& rhs);
  QuadNum& operator-=(const QuadNum& rhs);
  QuadNum& operator*=(const QuadNum& rhs);
  QuadNum& operator/=(const QuadNum& rhs) { return *this *= rhs.inverse(); }

  friend QuadNum operator+(QuadNum lhs, const QuadNum& rhs) { return lhs += rhs; }
  friend QuadNum operator-(QuadNum lhs, const QuadNum& rhs) { return lhs -= rhs; }
  friend QuadNum operator*(QuadNum lhs, const QuadNum& rhs) { return lhs *= rhs; }
  friend QuadNum operator/(QuadNum lhs, const QuadNum& rhs) { return lhs /= rhs; }
  QuadNum operator-() const { return QuadNum(-u_, -v_, d_, Normalized{}); }

  // Scaling by a rational never leaves the field.
  friend QuadNum operator*(QuadNum lhs, const Rational& rhs) {
    lhs.u_ *= rhs;
    lhs.v_ *= rhs;
    return lhs;
  }
  friend QuadNum operator*(const Rational& lhs, QuadNum rhs) { return std::move(rhs) * lhs; }

  /// Value equality: radicands are compared only when a surd part is present.
  friend bool operator==(const QuadNum& lhs, const QuadNum& rhs) {
    return lhs.u_ == rhs.u_ && lhs.v_ == rhs.v_ && (lhs.v_.is_zero() || lhs.d_ == rhs.d_);
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadNum& q) {
    return os << q.to_string();
  }

 private:
  struct Normalized {};
  QuadNum(Rational u, Rational v, Rational radicand, Normalized)
      : u_(std::move(u)), v_(std::move(v)), d_(std::move(radicand)) {}

  void require_same_field(const QuadNum& rhs) const;

  Rational u_;
  Rational v_;
  Rational d_;
};

QuadNum quad_add(const QuadNum& x, const QuadNum& y);
QuadNum quad_mul(const QuadNum& x, const QuadNum& y);
QuadNum quad_inv(const QuadNum& x);

}  // namespace eulersub
