#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "eulersub/error.hpp"
#include "eulersub/rat_func.hpp"

namespace eulersub {

class Parameterization;

/**
 * Integrand R(x, y) as an immutable tree. `y` stands for sqrt(a x^2 + b x + c).
 * Literals are non-negative rationals; negation is always an explicit node.
 */
class Expr {
 public:
  enum class Kind { Literal, VarX, VarY, Add, Sub, Mul, Div, Neg, Pow };

  static Expr literal(Rational value, SourceSpan span = {});
  static Expr var_x(SourceSpan span = {});
  static Expr var_y(SourceSpan span = {});
  static Expr binary(Kind kind, Expr lhs, Expr rhs, SourceSpan span = {});
  static Expr neg(Expr operand, SourceSpan span = {});
  static Expr pow(Expr base, int exponent, SourceSpan span = {});

  Kind kind() const noexcept;
  const Rational& value() const;  // Literal
  int exponent() const;           // Pow
  const Expr& lhs() const;        // binary nodes; operand of Neg and base of Pow
  const Expr& rhs() const;        // binary nodes
  SourceSpan span() const noexcept;

  /// Structural equality; source spans are ignored.
  friend bool operator==(const Expr& lhs, const Expr& rhs);

  friend Expr operator+(Expr l, Expr r) { return binary(Kind::Add, std::move(l), std::move(r)); }
  friend Expr operator-(Expr l, Expr r) { return binary(Kind::Sub, std::move(l), std::move(r)); }
  friend Expr operator*(Expr l, Expr r) { return binary(Kind::Mul, std::move(l), std::move(r)); }
  friend Expr operator/(Expr l, Expr r) { return binary(Kind::Div, std::move(l), std::move(r)); }

 struct Node;  // opaque

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
      : Error(ErrorCode::ParseError, message, SourceSpan{offset, 0}),
        offset_(offset),
        expected_(std::move(expected)) {}

  /// Byte offset of the failure; the message reports it as a 1-based column.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/**
 * Grammar (whitespace insignificant):
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '/') unary)*
 *   unary   := '-' unary | power
 *   power   := atom ('^' '-'? int)?
 *   atom    := int ('/' int)? | 'x' | 'y' | '(' expr ')'
 *
 * so -x^2 is -(x^2) and "3/2" is a single literal.
 */
Expr parse(std::string_view source);

/// Inverse of parse up to source spans: parse(render(e)) == e.
std::string render(const Expr& e);

/// Operations the evaluator needs from a field type F, beyond + - * / and unary -.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<double> {
  static double lift(const Rational& r, double) { return r.to_double(); }
  static bool is_zero(double v) { return v == 0.0; }
};

template <>
struct FieldTraits<QuadNum> {
  static QuadNum lift(const Rational& r, const QuadNum& like) {
    return QuadNum::rational(r, like.radicand());
  }
  static bool is_zero(const QuadNum& v) { return v.is_zero(); }
};

template <>
struct FieldTraits<RatFunc> {
  static RatFunc lift(const Rational& r, const RatFunc& like) {
    return RatFunc::constant(QuadNum::rational(r, like.radicand()), like.radicand());
  }
  static bool is_zero(const RatFunc& v) { return v.is_zero(); }
};

namespace detail {

[[noreturn]] void throw_division_by_zero(const Expr& divisor);

template <class F>
F power(const F& base, int exponent, const Expr& node) {
  using T = FieldTraits<F>;
  if (exponent < 0) {
    if (T::is_zero(base)) throw_division_by_zero(node.lhs());
    return T::lift(Rational(1), base) / power(base, -exponent, node);
  }
  F result = T::lift(Rational(1), base);
  F square = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1u) result = result * square;
    if (e > 1) square = square * square;
  }
  return result;
}

}  // namespace detail

/// Structural evaluation of e at (x, y) in any field F with FieldTraits<F>.
/// Division by the field's zero throws DivisionByZero carrying the divisor's span.
template <class F>
F evaluate(const Expr& e, const F& x, const F& y) {
  using T = FieldTraits<F>;
  switch (e.kind()) {
    case Expr::Kind::Literal: return T::lift(e.value(), x);
    case Expr::Kind::VarX: return x;
    case Expr::Kind::VarY: return y;
    case Expr::Kind::Add: return evaluate(e.lhs(), x, y) + evaluate(e.rhs(), x, y);
    case Expr::Kind::Sub: return evaluate(e.lhs(), x, y) - evaluate(e.rhs(), x, y);
    case Expr::Kind::Mul: return evaluate(e.lhs(), x, y) * evaluate(e.rhs(), x, y);
    case Expr::Kind::Div: {
      F den = evaluate(e.rhs(), x, y);
      if (T::is_zero(den)) detail::throw_division_by_zero(e.rhs());
      return evaluate(e.lhs(), x, y) / den;
    }
    case Expr::Kind::Neg: return -evaluate(e.lhs(), x, y);
    case Expr::Kind::Pow: return detail::power(evaluate(e.lhs(), x, y), e.exponent(), e);
  }
  throw Error(ErrorCode::InvalidArgument, "corrupt expression node");
}

/// R(x(t), y(t)) * x'(t), canonical. Needs an exact parameterization.
RatFunc integrand_in_t(const Expr& e, const Parameterization& param);

}  // namespace eulersub
