#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eulersub {

/**
 * Arbitrary-precision fraction, always stored in lowest terms with a
 * positive denominator. Zero is 0/1.
 */
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT(implicit)

  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Accepts "p", "p/q", and decimals such as "-1.25" or "2.5e-3". Decimals are
  /// scaled by exact powers of ten, never routed through binary floating point.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double (every finite double is a dyadic rational).
  static Rational from_double(double value);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  /// The rational r >= 0 with r*r == *this, if one exists.
  std::optional<Rational> exact_sqrt() const;

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;
  Rational pow(int exponent) const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

}  // namespace eulersub
