#include "eulersub/poly.hpp"

#include <utility>

#include "eulersub/error.hpp"

namespace eulersub {

Poly::Poly(std::vector<QuadNum> coeffs, Rational radicand)
    : coeffs_(std::move(coeffs)), radicand_(std::move(radicand)) {
  for (auto& c : coeffs_) c = c.with_radicand(radicand_);
  trim();
}

Poly Poly::constant(const QuadNum& value, const Rational& radicand) {
  return Poly({value}, radicand);
}

Poly Poly::variable(const Rational& radicand) {
  return Poly({QuadNum::rational(0, radicand), QuadNum::rational(1, radicand)}, radicand);
}

Poly Poly::from_rationals(std::initializer_list<Rational> coeffs, const Rational& radicand) {
  std::vector<QuadNum> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(QuadNum::rational(c, radicand));
  return Poly(std::move(out), radicand);
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& rhs) const {
  if (radicand_ != rhs.radicand_)
    throw Error(ErrorCode::RadicandMismatch,
                "polynomials over sqrt(" + radicand_.to_string() + ") and sqrt(" +
                    rhs.radicand_.to_string() + ")");
}

QuadNum Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return QuadNum::rational(0, radicand_);
  return coeffs_[static_cast<std::size_t>(k)];
}

const QuadNum& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly Poly::derivative() const {
  std::vector<QuadNum> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return Poly(std::move(out), radicand_);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

QuadNum Poly::eval(const QuadNum& t_in) const {
  // a rational argument is accepted in any field
  const QuadNum t = t_in.with_radicand(radicand_);
  QuadNum acc = QuadNum::rational(0, radicand_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Poly::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_double();
  return acc;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const QuadNum& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string mono;
    if (k == 1)
      mono = std::string(var);
    else if (k > 1)
      mono = std::string(var) + "^" + std::to_string(k);

    if (c.is_rational()) {
      const Rational mag = c.u().abs();
      std::string body;
      if (k == 0)
        body = mag.to_string();
      else if (mag == Rational(1))
        body = mono;
      else
        body = mag.to_string() + "*" + mono;
      if (c.u().sign() < 0)
        out += first ? "-" + body : " - " + body;
      else
        out += first ? body : " + " + body;
    } else {
      std::string body = k == 0 ? c.to_string() : c.to_string() + "*" + mono;
      out += first ? body : " + " + body;
    }
    first = false;
  }
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_field(rhs);
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), QuadNum::rational(0, radicand_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Poly& rhs) {
  require_same_field(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<QuadNum> out(coeffs_.size() + rhs.coeffs_.size() - 1,
                           QuadNum::rational(0, radicand_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const QuadNum& scalar) {
  const QuadNum s = scalar.with_radicand(radicand_);
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PolyDivision divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (dividend.radicand() != divisor.radicand())
    throw Error(ErrorCode::RadicandMismatch, "polynomial division across fields");
  const Rational& d = dividend.radicand();
  Poly remainder = dividend;
  const int dq = dividend.degree() - divisor.degree();
  if (dq < 0) return {Poly(d), remainder};

  std::vector<QuadNum> quotient(static_cast<std::size_t>(dq + 1), QuadNum::rational(0, d));
  const QuadNum lead_inv = divisor.leading().inverse();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    const int shift = remainder.degree() - divisor.degree();
    const QuadNum factor = remainder.leading() * lead_inv;
    quotient[static_cast<std::size_t>(shift)] = factor;
    std::vector<QuadNum> term(static_cast<std::size_t>(shift + 1), QuadNum::rational(0, d));
    term.back() = factor;
    const int before = remainder.degree();
    remainder -= Poly(std::move(term), d) * divisor;
    // The leading term cancels exactly; guard against a non-decreasing loop.
    if (!remainder.is_zero() && remainder.degree() >= before)
      throw Error(ErrorCode::RadicandDegenerate, "polynomial division failed to reduce degree");
  }
  return {Poly(std::move(quotient), d), remainder};
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.radicand() != q.radicand())
    throw Error(ErrorCode::RadicandMismatch, "gcd across fields");
  if (p.is_zero() && q.is_zero())
    throw Error(ErrorCode::InvalidArgument, "gcd(0, 0) is undefined");
  Poly a = p.monic();
  Poly b = q.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly compose(const Poly& outer, const Poly& inner) {
  if (outer.radicand() != inner.radicand())
    throw Error(ErrorCode::RadicandMismatch, "composition across fields");
  Poly acc(outer.radicand());
  for (int k = outer.degree(); k >= 0; --k)
    acc = acc * inner + Poly::constant(outer.coeff(k), outer.radicand());
  return acc;
}

namespace {

std::vector<Poly> sturm_sequence(const Poly& p) {
  Poly p0 = divmod(p, poly_gcd(p, p.derivative())).quotient;
  std::vector<Poly> seq{p0, p0.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = -divmod(seq[seq.size() - 2], seq.back()).remainder;
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  return seq;
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<Poly>& seq, const Rational& x) {
  std::vector<int> signs;
  const QuadNum xq = QuadNum::rational(x, seq.front().radicand());
  for (const auto& s : seq) signs.push_back(s.eval(xq).sign());
  return variations(signs);
}

int variations_at_infinity(const std::vector<Poly>& seq, bool positive) {
  std::vector<int> signs;
  for (const auto& s : seq) {
    int sg = s.leading().sign();
    if (!positive && s.degree() % 2 == 1) sg = -sg;
    signs.push_back(sg);
  }
  return variations(signs);
}

}  // namespace

int count_real_roots(const Poly& p, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has infinitely many roots");
  if (p.degree() == 0) return 0;
  if (lo && hi && *lo > *hi) return 0;
  const auto seq = sturm_sequence(p);
  const int v_lo = lo ? variations_at(seq, *lo) : variations_at_infinity(seq, false);
  const int v_hi = hi ? variations_at(seq, *hi) : variations_at_infinity(seq, true);
  // Sturm counts the half-open interval (lo, hi]; add a root sitting exactly at lo.
  int count = v_lo - v_hi;
  if (lo && seq.front().eval(QuadNum::rational(*lo, p.radicand())).is_zero()) ++count;
  return count;
}

}  // namespace eulersub
