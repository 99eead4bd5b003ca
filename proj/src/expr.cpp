#include "eulersub/expr.hpp"

#include <cctype>
#include <limits>
#include <variant>

#include "eulersub/substitution.hpp"

namespace eulersub {

struct Expr::Node {
  Kind kind;
  SourceSpan span;
  Rational value;
  int exponent = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

std::shared_ptr<Expr::Node> make_node(Expr::Kind kind, SourceSpan span) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = kind;
  n->span = span;
  return n;
}

bool same_tree(const Expr::Node* a, const Expr::Node* b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Literal: return a->value == b->value;
    case Expr::Kind::VarX:
    case Expr::Kind::VarY: return true;
    case Expr::Kind::Pow: return a->exponent == b->exponent && same_tree(a->lhs.get(), b->lhs.get());
    case Expr::Kind::Neg: return same_tree(a->lhs.get(), b->lhs.get());
    default: return same_tree(a->lhs.get(), b->lhs.get()) && same_tree(a->rhs.get(), b->rhs.get());
  }
}

}  // namespace

Expr Expr::literal(Rational value, SourceSpan span) {
  if (value.sign() < 0)
    throw Error(ErrorCode::InvalidArgument, "expression literals are non-negative; use negation");
  auto n = make_node(Kind::Literal, span);
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::var_x(SourceSpan span) { return Expr(make_node(Kind::VarX, span)); }
Expr Expr::var_y(SourceSpan span) { return Expr(make_node(Kind::VarY, span)); }

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs, SourceSpan span) {
  if (kind != Kind::Add && kind != Kind::Sub && kind != Kind::Mul && kind != Kind::Div)
    throw Error(ErrorCode::InvalidArgument, "not a binary operator");
  auto n = make_node(kind, span);
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Expr(std::move(n));
}

Expr Expr::neg(Expr operand, SourceSpan span) {
  auto n = make_node(Kind::Neg, span);
  n->lhs = std::move(operand.node_);
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, int exponent, SourceSpan span) {
  auto n = make_node(Kind::Pow, span);
  n->lhs = std::move(base.node_);
  n->exponent = exponent;
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
int Expr::exponent() const { return node_->exponent; }
SourceSpan Expr::span() const noexcept { return node_->span; }

const Expr& Expr::lhs() const {
  // Expr is a thin handle around the node pointer; reinterpret the stored
  // shared_ptr as an Expr without copying.
  static_assert(sizeof(Expr) == sizeof(std::shared_ptr<const Node>));
  return reinterpret_cast<const Expr&>(node_->lhs);
}

const Expr& Expr::rhs() const {
  return reinterpret_cast<const Expr&>(node_->rhs);
}

bool operator==(const Expr& lhs, const Expr& rhs) { return same_tree(lhs.node_.get(), rhs.node_.get()); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == ch;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail = {}) {
    std::string found = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
    std::string msg = "parse error at column " + std::to_string(pos_ + 1) + ": ";
    if (!detail.empty()) {
      msg += detail;
    } else {
      msg += "expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
      }
      msg += ", found " + found;
    }
    throw ParseError(pos_, std::move(expected), msg);
  }

  SourceSpan span_from(std::size_t start) const { return {start, pos_ - start}; }

  Expr expr() {
    skip_ws();
    const std::size_t start = pos_;
    Expr lhs = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        Expr rhs = term();
        lhs = Expr::binary(Expr::Kind::Add, lhs, rhs, span_from(start));
      } else if (peek('-')) {
        ++pos_;
        Expr rhs = term();
        lhs = Expr::binary(Expr::Kind::Sub, lhs, rhs, span_from(start));
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    skip_ws();
    const std::size_t start = pos_;
    Expr lhs = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        Expr rhs = unary();
        lhs = Expr::binary(Expr::Kind::Mul, lhs, rhs, span_from(start));
      } else if (peek('/')) {
        ++pos_;
        Expr rhs = unary();
        lhs = Expr::binary(Expr::Kind::Div, lhs, rhs, span_from(start));
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek('-')) {
      ++pos_;
      Expr operand = unary();
      return Expr::neg(operand, span_from(start));
    }
    return power();
  }

  Expr power() {
    skip_ws();
    const std::size_t start = pos_;
    Expr base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    bool negative = false;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    if (!peek_digit()) fail({"integer exponent"});
    const std::size_t digits_start = pos_;
    const std::string digits = integer();
    if (digits.size() > 10 || std::stoll(digits) > std::numeric_limits<int>::max()) {
      pos_ = digits_start;
      fail({"integer exponent"}, "exponent " + digits + " exceeds 2^31 - 1");
    }
    const int e = static_cast<int>(std::stoll(digits));
    return Expr::pow(base, negative ? -e : e, span_from(start));
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) fail({"integer", "'x'", "'y'", "'('", "'-'"});
    const char ch = src_[pos_];
    if (ch == 'x') {
      ++pos_;
      return Expr::var_x(span_from(start));
    }
    if (ch == 'y') {
      ++pos_;
      return Expr::var_y(span_from(start));
    }
    if (ch == '(') {
      ++pos_;
      Expr inner = expr();
      if (!peek(')')) fail({"')'", "'+'", "'-'", "'*'", "'/'", "'^'"});
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::string num = integer();
      std::size_t end = pos_;
      // "p/q" with an integer right after the slash is one literal.
      if (peek('/')) {
        const std::size_t slash = pos_;
        ++pos_;
        if (peek_digit()) {
          const std::size_t den_start = pos_;
          const std::string den = integer();
          if (mpz_class(den) == 0) {
            pos_ = den_start;
            fail({"nonzero integer"}, "zero denominator in rational literal");
          }
          return Expr::literal(Rational(mpq_class(mpz_class(num), mpz_class(den))), span_from(start));
        }
        pos_ = slash;
      }
      pos_ = end;
      return Expr::literal(Rational(mpq_class(mpz_class(num))), span_from(start));
    }
    fail({"integer", "'x'", "'y'", "'('", "'-'"});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

struct Rendered {
  std::string text;
  bool ends_with_integer = false;  // a trailing integer literal could swallow a following "/int"
};

Rendered render_node(const Expr& e);

Rendered wrap_if(Rendered r, bool wrap) {
  if (!wrap) return r;
  return {"(" + r.text + ")", false};
}

Rendered render_node(const Expr& e) {
  const int prec = precedence(e.kind());
  switch (e.kind()) {
    case Expr::Kind::Literal: return {e.value().to_string(), e.value().is_integer()};
    case Expr::Kind::VarX: return {"x", false};
    case Expr::Kind::VarY: return {"y", false};
    case Expr::Kind::Neg: {
      Rendered inner = wrap_if(render_node(e.lhs()), precedence(e.lhs().kind()) < prec);
      return {"-" + inner.text, inner.ends_with_integer};
    }
    case Expr::Kind::Pow: {
      const Expr& base = e.lhs();
      const bool wrap = precedence(base.kind()) < 5 ||
                        (base.kind() == Expr::Kind::Literal && !base.value().is_integer());
      Rendered b = wrap_if(render_node(base), wrap);
      return {b.text + "^" + std::to_string(e.exponent()), false};
    }
    default: break;
  }
  Rendered l = wrap_if(render_node(e.lhs()), precedence(e.lhs().kind()) < prec);
  Rendered r = wrap_if(render_node(e.rhs()), precedence(e.rhs().kind()) <= prec);
  const char* op = "";
  switch (e.kind()) {
    case Expr::Kind::Add: op = " + "; break;
    case Expr::Kind::Sub: op = " - "; break;
    case Expr::Kind::Mul: op = "*"; break;
    case Expr::Kind::Div: op = "/"; break;
    default: break;
  }
  if (e.kind() == Expr::Kind::Div && l.ends_with_integer && !r.text.empty() &&
      std::isdigit(static_cast<unsigned char>(r.text.front())))
    r = wrap_if(r, true);
  return {l.text + op + r.text, r.ends_with_integer};
}

}  // namespace

Expr parse(std::string_view source) { return Parser(source).run(); }

std::string render(const Expr& e) { return render_node(e).text; }

namespace detail {

void throw_division_by_zero(const Expr& divisor) {
  throw Error(ErrorCode::DivisionByZero, "division by zero: '" + render(divisor) + "' evaluates to 0",
              divisor.span());
}

}  // namespace detail

RatFunc integrand_in_t(const Expr& e, const Parameterization& param) {
  if (!param.exact())
    throw Error(ErrorCode::InexactParameterization,
                "method '" + param.method().to_string() +
                    "' has numeric coefficients here; use the numeric integration path");
  return evaluate(e, param.x_of_t(), param.y_of_t()) * param.dxdt();
}

}  // namespace eulersub
