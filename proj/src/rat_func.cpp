#include "eulersub/rat_func.hpp"

#include <algorithm>
#include <cmath>

#include "eulersub/error.hpp"

namespace eulersub {

NumericPoly NumericPoly::derivative() const {
  NumericPoly out;
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    out.coeffs.push_back(coeffs[k] * static_cast<double>(k));
  return out;
}

NumericPoly operator*(const NumericPoly& lhs, const NumericPoly& rhs) {
  if (lhs.coeffs.empty() || rhs.coeffs.empty()) return {};
  NumericPoly out{std::vector<double>(lhs.coeffs.size() + rhs.coeffs.size() - 1, 0.0)};
  for (std::size_t i = 0; i < lhs.coeffs.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs.size(); ++j)
      out.coeffs[i + j] += lhs.coeffs[i] * rhs.coeffs[j];
  return out;
}

NumericPoly operator+(const NumericPoly& lhs, const NumericPoly& rhs) {
  NumericPoly out{std::vector<double>(std::max(lhs.coeffs.size(), rhs.coeffs.size()), 0.0)};
  for (std::size_t i = 0; i < lhs.coeffs.size(); ++i) out.coeffs[i] += lhs.coeffs[i];
  for (std::size_t i = 0; i < rhs.coeffs.size(); ++i) out.coeffs[i] += rhs.coeffs[i];
  return out;
}

NumericPoly operator-(const NumericPoly& lhs, const NumericPoly& rhs) {
  NumericPoly neg = rhs;
  for (auto& c : neg.coeffs) c = -c;
  return lhs + neg;
}

double NumericRatFunc::eval(double t, double pole_floor) const {
  const double d = den(t);
  if (!(std::abs(d) >= pole_floor))
    throw Error(ErrorCode::PoleEvaluation, "denominator vanishes at t = " + std::to_string(t));
  return num(t) / d;
}

NumericRatFunc NumericRatFunc::derivative() const {
  return {num.derivative() * den - num * den.derivative(), den * den};
}

RatFunc::RatFunc(Rational radicand)
    : num_(radicand), den_(Poly::constant(QuadNum::rational(1, radicand), radicand)) {}

RatFunc::RatFunc(Poly polynomial)
    : num_(std::move(polynomial)),
      den_(Poly::constant(QuadNum::rational(1, num_.radicand()), num_.radicand())) {}

RatFunc RatFunc::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.radicand() != den.radicand())
    throw Error(ErrorCode::RadicandMismatch, "numerator and denominator over different fields");
  if (num.is_zero()) return RatFunc(den.radicand());
  if (!den.is_constant()) {
    const Poly g = poly_gcd(num, den);
    if (!g.is_one()) {
      num = divmod(num, g).quotient;
      den = divmod(den, g).quotient;
    }
  }
  const QuadNum scale = den.leading().inverse();
  RatFunc out(num * scale, den * scale, 0);
#ifdef EULERSUB_CHECK_INVARIANTS
  if (!is_canonical(out))
    throw Error(ErrorCode::RadicandDegenerate, "normalization produced a non-canonical form");
#endif
  return out;
}

RatFunc RatFunc::constant(const QuadNum& value, const Rational& radicand) {
  return RatFunc(Poly::constant(value, radicand));
}

RatFunc RatFunc::variable(const Rational& radicand) { return RatFunc(Poly::variable(radicand)); }

RatFunc RatFunc::derivative() const {
  return normalize(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

double RatFunc::eval(double t, double pole_floor) const {
  const double d = den_.eval(t);
  if (!(std::abs(d) >= pole_floor))
    throw Error(ErrorCode::PoleEvaluation, "denominator vanishes at t = " + std::to_string(t));
  return num_.eval(t) / d;
}

QuadNum RatFunc::eval(const QuadNum& t) const {
  const QuadNum d = den_.eval(t);
  if (d.is_zero())
    throw Error(ErrorCode::PoleEvaluation, "denominator vanishes at t = " + t.to_string());
  return num_.eval(t) / d;
}

NumericRatFunc RatFunc::to_numeric() const {
  NumericRatFunc out;
  for (const auto& c : num_.coefficients()) out.num.coeffs.push_back(c.to_double());
  for (const auto& c : den_.coefficients()) out.den.coeffs.push_back(c.to_double());
  return out;
}

std::string RatFunc::to_string(std::string_view var) const {
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero function");
  return normalize(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_)
    *this = normalize(num_ + rhs.num_, den_);
  else
    *this = normalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  *this = normalize(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero function");
  *this = normalize(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc ratfunc_normalize(Poly num, Poly den) { return RatFunc::normalize(std::move(num), std::move(den)); }
RatFunc ratfunc_derivative(const RatFunc& f) { return f.derivative(); }
double ratfunc_eval(const RatFunc& f, double t, double pole_floor) { return f.eval(t, pole_floor); }

RatFunc compose(const RatFunc& outer, const RatFunc& inner) {
  // Horner in the field of rational functions.
  auto horner = [&](const Poly& p) {
    RatFunc acc(p.radicand());
    for (int k = p.degree(); k >= 0; --k)
      acc = acc * inner + RatFunc::constant(p.coeff(k), p.radicand());
    return acc;
  };
  return horner(outer.numerator()) / horner(outer.denominator());
}

bool is_canonical(const RatFunc& f) {
  const Poly& den = f.denominator();
  if (den.is_zero() || !den.leading().is_one()) return false;
  if (f.numerator().is_zero()) return den.is_one();
  return poly_gcd(f.numerator(), den).is_one();
}

}  // namespace eulersub
