#include "eulersub/quad_num.hpp"

#include <cmath>

#include "eulersub/error.hpp"

namespace eulersub {

QuadNum::QuadNum(Rational u, Rational v, Rational radicand)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(radicand)) {
  if (d_.sign() < 0)
    throw Error(ErrorCode::NegativeRadicand,
                "negative radicand " + d_.to_string() + " (complex surds are not supported)");
  if (!v_.is_zero()) {
    if (auto root = d_.exact_sqrt()) {
      u_ += v_ * *root;
      v_ = Rational(0);
    }
  }
}

void QuadNum::require_same_field(const QuadNum& rhs) const {
  if (d_ != rhs.d_)
    throw Error(ErrorCode::RadicandMismatch,
                "mixing sqrt(" + d_.to_string() + ") and sqrt(" + rhs.d_.to_string() + ")");
}

int QuadNum::sign() const {
  const int su = u_.sign();
  const int sv = v_.sign();
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: compare u^2 against d*v^2.
  const Rational uu = u_ * u_;
  const Rational dvv = d_ * v_ * v_;
  if (uu == dvv) return 0;
  return uu > dvv ? su : sv;
}

double QuadNum::to_double() const {
  if (v_.is_zero()) return u_.to_double();
  return u_.to_double() + v_.to_double() * std::sqrt(d_.to_double());
}

QuadNum QuadNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(sqrt(d))");
  const Rational n = norm();
  if (n.is_zero())
    throw Error(ErrorCode::RadicandDegenerate,
                "zero norm for nonzero element " + to_string());
  return QuadNum(u_ / n, -v_ / n, d_, Normalized{});
}

QuadNum QuadNum::with_radicand(const Rational& radicand) const {
  if (!v_.is_zero() && radicand != d_)
    throw Error(ErrorCode::RadicandMismatch,
                "cannot move " + to_string() + " into Q(sqrt(" + radicand.to_string() + "))");
  return QuadNum(u_, v_, radicand);
}

std::string QuadNum::to_string() const {
  if (v_.is_zero()) return u_.to_string();
  const std::string surd = "sqrt(" + d_.to_string() + ")";
  std::string out = "(";
  if (!u_.is_zero()) {
    out += u_.to_string();
    out += v_.sign() < 0 ? " - " : " + ";
    const Rational mag = v_.abs();
    out += mag == Rational(1) ? surd : mag.to_string() + "*" + surd;
  } else {
    if (v_ == Rational(1))
      out += surd;
    else if (v_ == Rational(-1))
      out += "-" + surd;
    else
      out += v_.to_string() + "*" + surd;
  }
  return out + ")";
}

QuadNum& QuadNum::operator+=(const QuadNum& rhs) {
  require_same_field(rhs);
  u_ += rhs.u_;
  v_ += rhs.v_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& rhs) {
  require_same_field(rhs);
  u_ -= rhs.u_;
  v_ -= rhs.v_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& rhs) {
  require_same_field(rhs);
  Rational u = u_ * rhs.u_;
  Rational v = u_ * rhs.v_ + v_ * rhs.u_;
  if (!v_.is_zero() && !rhs.v_.is_zero()) u += d_ * v_ * rhs.v_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

QuadNum quad_add(const QuadNum& x, const QuadNum& y) { return x + y; }
QuadNum quad_mul(const QuadNum& x, const QuadNum& y) { return x * y; }
QuadNum quad_inv(const QuadNum& x) { return x.inverse(); }

}  // namespace eulersub
