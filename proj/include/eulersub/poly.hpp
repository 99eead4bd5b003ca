#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulersub/quad_num.hpp"

namespace eulersub {

/**
 * Dense univariate polynomial over Q(sqrt(d)), coefficients in ascending
 * degree. The zero polynomial has no coefficients; otherwise the leading
 * coefficient is nonzero. The radicand is carried explicitly so that the
 * zero polynomial still knows its field.
 */
class Poly {
 public:
  explicit Poly(Rational radicand = Rational(0)) : radicand_(std::move(radicand)) {}
  Poly(std::vector<QuadNum> coeffs, Rational radicand);

  static Poly constant(const QuadNum& value, const Rational& radicand);
  /// The polynomial t.
  static Poly variable(const Rational& radicand);
  /// Rational coefficients, ascending degree.
  static Poly from_rationals(std::initializer_list<Rational> coeffs,
                             const Rational& radicand = Rational(0));

  const Rational& radicand() const noexcept { return radicand_; }
  const std::vector<QuadNum>& coefficients() const noexcept { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  QuadNum coeff(int k) const;
  const QuadNum& leading() const;

  Poly derivative() const;
  Poly monic() const;

  QuadNum eval(const QuadNum& t) const;
  double eval(double t) const;

  /// "c_k*t^k + ... + c_0"; "0" for the zero polynomial.
  std::string to_string(std::string_view var = "t") const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const QuadNum& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const QuadNum& rhs) { return lhs *= rhs; }
  friend Poly operator*(const QuadNum& lhs, Poly rhs) { return rhs *= lhs; }
  Poly operator-() const;

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  void require_same_field(const Poly& rhs) const;

  std::vector<QuadNum> coeffs_;
  Rational radicand_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over the field Q(sqrt(d)).
PolyDivision divmod(const Poly& dividend, const Poly& divisor);

/// Monic gcd via the Euclidean algorithm; gcd(p, 0) = monic(p).
Poly poly_gcd(const Poly& p, const Poly& q);

/// outer(inner(t))
Poly compose(const Poly& outer, const Poly& inner);

/// Number of distinct real roots in the closed interval [lo, hi]. Either bound
/// may be omitted to mean -inf / +inf. Exact (Sturm sequence over Q(sqrt(d))).
int count_real_roots(const Poly& p, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi);

}  // namespace eulersub
