#pragma once

// Small conveniences shared by the unit tests.

#include <initializer_list>
#include <optional>

#include "eulersub/error.hpp"
#include "eulersub/rat_func.hpp"

namespace helpers {

using eulersub::Error;
using eulersub::ErrorCode;
using eulersub::Poly;
using eulersub::QuadNum;
using eulersub::RatFunc;
using eulersub::Rational;

inline Poly P(std::initializer_list<Rational> cs, const Rational& d = Rational(0)) {
  return Poly::from_rationals(cs, d);
}

/// num/den from ascending rational coefficient lists.
inline RatFunc R(std::initializer_list<Rational> num, std::initializer_list<Rational> den,
                 const Rational& d = Rational(0)) {
  return eulersub::ratfunc_normalize(P(num, d), P(den, d));
}

inline RatFunc K(const QuadNum& value, const Rational& d) {
  return RatFunc::constant(value.with_radicand(d), d);
}
inline RatFunc K(const Rational& value, const Rational& d) { return K(QuadNum::rational(value, d), d); }

/// The error code thrown by fn, or nullopt when it returns normally.
inline std::optional<ErrorCode> code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace helpers
