#include <doctest.h>

#include "eulersub/rat_func.hpp"
#include "gen.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace eulersub;
using helpers::code_of;
using helpers::P;

namespace {

QuadNum q(long u_num, long u_den, long v_num, long v_den, long d) {
  return QuadNum(Rational(u_num, u_den), Rational(v_num, v_den), Rational(d));
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/8") == Rational(-1, 2));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("-2.5e-3") == Rational(-1, 400));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(code_of([] { Rational::parse("1/0"); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { Rational::parse("abc"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Rational::parse(""); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("rational from_double and exact_sqrt") {
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
  CHECK(Rational::from_double(-2.0) == Rational(-2));
  CHECK(Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK_FALSE(Rational(2).exact_sqrt().has_value());
  CHECK_FALSE(Rational(-4).exact_sqrt().has_value());
}

TEST_CASE("quad_add") {
  CHECK(quad_add(q(1, 1, 2, 1, 2), q(3, 1, -2, 1, 2)) == QuadNum::rational(4, 2));
  const QuadNum z = q(7, 3, -1, 5, 5);
  CHECK(quad_add(QuadNum::rational(0, 5), z) == z);
  CHECK(quad_add(q(1, 2, 1, 3, 5), q(1, 2, 2, 3, 5)) == q(1, 1, 1, 1, 5));
  CHECK(code_of([] { quad_add(QuadNum::sqrt_of(2), QuadNum::sqrt_of(3)); }) == ErrorCode::RadicandMismatch);
}

TEST_CASE("quad_mul") {
  CHECK(quad_mul(q(1, 1, 1, 1, 2), q(1, 1, -1, 1, 2)) == QuadNum::rational(-1, 2));
  CHECK(quad_mul(QuadNum::sqrt_of(3), QuadNum::sqrt_of(3)) == QuadNum::rational(3, 3));
  const QuadNum x = q(2, 1, 1, 1, 5);
  CHECK(quad_mul(x, x) == q(9, 1, 4, 1, 5));
  CHECK(oracle::Mat2::of(quad_mul(x, x)) == oracle::Mat2::of(x) * oracle::Mat2::of(x));
}

TEST_CASE("quad_inv") {
  CHECK(quad_inv(q(1, 1, 1, 1, 2)) == q(-1, 1, 1, 1, 2));
  CHECK(quad_inv(QuadNum::rational(2)) == QuadNum::rational(Rational(1, 2)));
  CHECK(quad_inv(q(3, 1, 1, 1, 5)) == q(3, 4, -1, 4, 5));
  CHECK(code_of([] { quad_inv(QuadNum::rational(0, 3)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("perfect-square radicands collapse") {
  const QuadNum two = QuadNum(Rational(0), Rational(1), Rational(4));
  CHECK(two.v().is_zero());
  CHECK(two.u() == Rational(2));
  CHECK(QuadNum::sqrt_of(Rational(9, 4)).u() == Rational(3, 2));
  CHECK(code_of([] { QuadNum::sqrt_of(Rational(-2)); }) == ErrorCode::NegativeRadicand);
}

TEST_CASE("quad sign is exact") {
  CHECK(q(-1, 1, 1, 1, 2).sign() == 1);   // -1 + 1.414...
  CHECK(q(3, 1, -2, 1, 2).sign() == 1);   // 3 - 2.828...
  CHECK(q(-3, 1, 2, 1, 2).sign() == -1);
  CHECK(q(0, 1, 0, 1, 2).sign() == 0);
}

TEST_CASE("field axioms on random triples") {
  gen::Rng rng(1001);
  const Rational radicands[] = {Rational(2), Rational(3), Rational(5), Rational(7), Rational(1, 2), Rational(4)};
  for (int i = 0; i < 1000; ++i) {
    const Rational& d = radicands[i % 6];
    const QuadNum x = gen::quad(rng, d), y = gen::quad(rng, d), z = gen::quad(rng, d);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(oracle::Mat2::of(x * y) == oracle::Mat2::of(x) * oracle::Mat2::of(y));
    if (!x.is_zero()) CHECK(quad_mul(x, quad_inv(x)).is_one());
  }
}

TEST_CASE("poly_gcd") {
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(poly_gcd(P({1, 0, 1}), P({2, 1})) == P({1}));
  const Rational d(2);
  const Poly t2m2 = P({-2, 0, 1}, d);
  const Poly tms = Poly({-QuadNum::sqrt_of(d), QuadNum::rational(1, d)}, d);
  CHECK(poly_gcd(t2m2, tms) == tms);
  CHECK(divmod(t2m2, tms).remainder.is_zero());
  CHECK(code_of([] { poly_gcd(P({1, 1}, 2), P({1, 1}, 3)); }) == ErrorCode::RadicandMismatch);
}

TEST_CASE("poly_gcd against products of known linear factors") {
  // gcd of prod (t - r_i) and prod (t - s_j) is the product over shared roots.
  gen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> shared, left, right;
    for (long k = gen::integer(rng, 0, 2); k > 0; --k) shared.push_back(Rational(gen::integer(rng, -20, 20), 3));
    for (long k = gen::integer(rng, 0, 2); k > 0; --k) left.push_back(Rational(gen::integer(rng, 21, 40), 1));
    for (long k = gen::integer(rng, 0, 2); k > 0; --k) right.push_back(Rational(gen::integer(rng, -40, -21), 1));
    std::sort(shared.begin(), shared.end());
    shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
    auto product = [](const std::vector<Rational>& roots) {
      Poly p = P({1});
      for (const Rational& r : roots) p *= P({-r, 1});
      return p;
    };
    const Poly g = product(shared);
    const QuadNum k1 = QuadNum::rational(gen::nonzero(rng)), k2 = QuadNum::rational(gen::nonzero(rng));
    const Poly p = product(left) * g * k1;
    const Poly r = product(right) * g * k2;
    CHECK(poly_gcd(p, r) == g);
  }
}

TEST_CASE("Sturm root counting") {
  const Poly p = P({-1, 0, 1});  // roots -1, 1
  CHECK(count_real_roots(p, std::nullopt, std::nullopt) == 2);
  CHECK(count_real_roots(p, Rational(0), Rational(2)) == 1);
  CHECK(count_real_roots(p, Rational(1), Rational(2)) == 1);  // closed interval
  CHECK(count_real_roots(p, Rational(-1, 2), Rational(1, 2)) == 0);
  CHECK(count_real_roots(P({1, 0, 1}), std::nullopt, std::nullopt) == 0);
  CHECK(count_real_roots(P({0, 0, 1}), std::nullopt, std::nullopt) == 1);  // double root counted once
  const Rational d(2);
  const Poly s = P({-2, 0, 1}, d);
  CHECK(count_real_roots(s, Rational(141, 100), Rational(142, 100)) == 1);
  CHECK(count_real_roots(s, Rational(142, 100), Rational(2)) == 0);
}

TEST_CASE("ratfunc_normalize") {
  CHECK(ratfunc_normalize(P({-1, 0, 1}), P({-1, 1})) == RatFunc(P({1, 1})));
  const RatFunc half = ratfunc_normalize(P({0, 2}), P({4}));
  CHECK(half.numerator() == P({0, Rational(1, 2)}));
  CHECK(half.denominator() == P({1}));
  const Rational d(2);
  const QuadNum s2 = QuadNum::sqrt_of(d);
  const RatFunc f = ratfunc_normalize(P({-2, 0, 1}, d), Poly({QuadNum::rational(2, d), s2 * Rational(-2), QuadNum::rational(1, d)}, d));
  CHECK(f.numerator() == Poly({s2, QuadNum::rational(1, d)}, d));
  CHECK(f.denominator() == Poly({-s2, QuadNum::rational(1, d)}, d));
  CHECK(code_of([] { ratfunc_normalize(P({1}), P({})); }) == ErrorCode::DivisionByZero);
  CHECK(RatFunc::normalize(P({}), P({3, 1})).denominator() == P({1}));
}

TEST_CASE("normalization is idempotent and canonical on random inputs") {
  gen::Rng rng(11);
  const Rational radicands[] = {Rational(0), Rational(2), Rational(3, 2)};
  for (int i = 0; i < 300; ++i) {
    const Rational& d = radicands[i % 3];
    const RatFunc f = gen::ratfunc(rng, d);
    CHECK(is_canonical(f));
    CHECK(RatFunc::normalize(f.numerator(), f.denominator()) == f);
    CHECK(poly_gcd(f.numerator(), f.denominator()).is_one());
  }
}

TEST_CASE("canonical equality matches functional equality") {
  gen::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Rational d(3);
    const RatFunc f = gen::ratfunc(rng, d);
    Poly k = gen::poly(rng, d, 2);
    if (k.is_zero()) continue;
    const RatFunc g = RatFunc::normalize(f.numerator() * k, f.denominator() * k);
    CHECK(g == f);
    CHECK(oracle::same_function(f, g));
  }
}

TEST_CASE("ratfunc_derivative") {
  const RatFunc t = RatFunc::variable(0);
  CHECK(ratfunc_derivative(t * t) == RatFunc(P({0, 2})));
  CHECK(ratfunc_derivative(t.inverse()) == ratfunc_normalize(P({-1}), P({0, 0, 1})));
  // d/dt [2 t sqrt(q) / (a - t^2)] = 2 (a + t^2) sqrt(q) / (a - t^2)^2 for a = 3, q = 5.
  const Rational d(5);
  const QuadNum sq = QuadNum::sqrt_of(d);
  const RatFunc x = RatFunc::normalize(Poly({QuadNum::rational(0, d), sq * Rational(2)}, d), P({3, 0, -1}, d));
  const RatFunc expected = RatFunc::normalize(Poly({sq * Rational(6), QuadNum::rational(0, d), sq * Rational(2)}, d),
                                              P({9, 0, -6, 0, 1}, d));
  CHECK(ratfunc_derivative(x) == expected);
}

TEST_CASE("derivative is linear on random functions") {
  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const Rational d(i % 2 ? 2 : 0);
    const RatFunc f = gen::ratfunc(rng, d, 2), g = gen::ratfunc(rng, d, 2);
    CHECK((f + g).derivative() == f.derivative() + g.derivative());
  }
}

TEST_CASE("ratfunc_eval") {
  CHECK(ratfunc_eval(RatFunc(P({1, 1})), 2.0) == 3.0);
  CHECK(code_of([] { ratfunc_eval(ratfunc_normalize(P({1}), P({-1, 1})), 1.0); }) == ErrorCode::PoleEvaluation);
  CHECK(ratfunc_eval(ratfunc_normalize(P({1, 0, 1}), P({0, 2})), 1.0) == doctest::Approx(1.0));
  const Rational d(2);
  const RatFunc f = RatFunc::normalize(Poly({QuadNum::sqrt_of(d), QuadNum::rational(1, d)}, d), P({1}, d));
  CHECK(ratfunc_eval(f, 1.0) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("rendering contract") {
  CHECK(ratfunc_normalize(P({1, 0, 1}), P({0, 2})).to_string() == "(1/2*t^2 + 1/2) / (t)");
  CHECK(RatFunc(P({})).to_string() == "(0) / (1)");
  const Rational d(2);
  const RatFunc f = RatFunc::normalize(Poly({QuadNum(Rational(1, 2), Rational(-3), d), QuadNum::rational(1, d)}, d),
                                       P({-1, 0, 1}, d));
  CHECK(f.to_string() == "(t + (1/2 - 3*sqrt(2))) / (t^2 - 1)");
  CHECK(ratfunc_normalize(P({0, -2}), P({-1, 0, 1})).to_string() == "(-2*t) / (t^2 - 1)");
}

TEST_CASE("composition") {
  const RatFunc t = RatFunc::variable(0);
  const RatFunc f = (t * t + RatFunc::constant(QuadNum::rational(1), 0)).inverse();
  const RatFunc g = t + RatFunc::constant(QuadNum::rational(1), 0);
  CHECK(compose(f, g) == ratfunc_normalize(P({1}), P({2, 2, 1})));
}
