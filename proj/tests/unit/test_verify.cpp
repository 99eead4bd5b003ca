#include <cmath>
#include <numbers>

#include <doctest.h>

#include "eulersub/verify.hpp"
#include "gen.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace eulersub;
using helpers::code_of;

namespace {

const double kAsinh1 = oracle::asinh_integral(0, 1);
const double kAcosh23 = oracle::acosh_integral(2, 3);
constexpr double kHalfPi = std::numbers::pi / 2;

std::vector<Method> methods(std::initializer_list<const char*> names) {
  std::vector<Method> out;
  for (const char* n : names) out.push_back(Method::parse(n));
  return out;
}

}  // namespace

TEST_CASE("Gauss-Legendre examples") {
  CHECK(std::abs(gauss_legendre([](double x) { return x * x; }, 0, 1) - 1.0 / 3) < 1e-14);
  CHECK(std::abs(gauss_legendre([](double) { return 1.0; }, 2, 5) - 3.0) < 1e-15);
  CHECK(std::abs(gauss_legendre([](double x) { return 1 / (1 + x * x); }, 0, 1) - std::numbers::pi / 4) < 1e-12);

  // one panel of n nodes integrates degree 2n - 1 exactly
  const QuadratureConfig small{4, 1};
  CHECK(gauss_legendre([](double x) { return std::pow(x, 7); }, 0, 1, small) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(gauss_legendre([](double x) { return std::pow(x, 8); }, 0, 1, small) != doctest::Approx(1.0 / 9).epsilon(1e-10));

  CHECK(code_of([] { gauss_legendre([](double) { return NAN; }, 0, 1); }) == ErrorCode::NonFiniteEvaluation);
  CHECK(code_of([] { gauss_legendre([](double x) { return x > 0.5 ? INFINITY : x; }, 0, 1); }) ==
        ErrorCode::NonFiniteEvaluation);
}

TEST_CASE("quadrature config bounds") {
  CHECK_NOTHROW(QuadratureConfig{2, 1}.validate());
  CHECK_NOTHROW(QuadratureConfig{128, 1}.validate());
  CHECK(code_of([] { QuadratureConfig{1, 1}.validate(); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { QuadratureConfig{129, 1}.validate(); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { QuadratureConfig{32, 0}.validate(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("direct integral examples") {
  const Expr inv_y = parse("1/y");
  CHECK(std::abs(direct_integral(inv_y, Conic(1, 0, 1), 0, 1, Sign::Plus) - kAsinh1) < 1e-13);
  CHECK(std::abs(direct_integral(inv_y, Conic(1, 0, -1), 2, 3, Sign::Plus) - kAcosh23) < 1e-13);
  CHECK(std::abs(direct_integral(inv_y, Conic(1, 0, 1), 0, 1, Sign::Minus) + kAsinh1) < 1e-13);
  // the endpoint square-root singularity limits plain Gauss-Legendre here
  CHECK(std::abs(direct_integral(parse("y"), Conic(-1, 0, 1), -1, 1, Sign::Plus) - kHalfPi) < 1e-7);
  CHECK(std::abs(direct_integral(parse("y"), Conic(-1, 0, 1), -0.5, 0.5, Sign::Plus) -
                 oracle::half_disc_integral(-0.5, 0.5)) < 1e-14);

  CHECK(code_of([&] { direct_integral(inv_y, Conic(1, 0, -1), 0, 0.5, Sign::Plus); }) == ErrorCode::DomainViolation);
  CHECK(code_of([&] { direct_integral(parse("1/(x - x)"), Conic(1, 0, 1), -1, 1, Sign::Plus); }) ==
        ErrorCode::NonFiniteEvaluation);
}

TEST_CASE("substituted integral examples") {
  const Expr inv_y = parse("1/y");
  CHECK(std::abs(substituted_integral(inv_y, euler1(Conic(1, 0, 1), Sign::Plus), 0, 1, Sign::Plus) - kAsinh1) < 1e-9);
  CHECK(std::abs(substituted_integral(parse("y"), euler2(Conic(-1, 0, 1), Sign::Plus), -1, 1, Sign::Plus) - kHalfPi) <
        1e-9);
  CHECK(std::abs(substituted_integral(inv_y, euler4(Conic(1, 0, 1), Sign::Plus), 0, 1, Sign::Plus) - kAsinh1) < 1e-9);
  CHECK(std::abs(substituted_integral(inv_y, trig_param(Conic(2, 0, 1)), 0, 1, Sign::Plus) -
                 std::asinh(std::sqrt(2.0)) / std::sqrt(2.0)) < 1e-9);
  // the lower branch negates the integrand
  CHECK(std::abs(substituted_integral(inv_y, euler4(Conic(1, 0, 1), Sign::Plus), 0, 1, Sign::Minus) + kAsinh1) < 1e-9);
}

TEST_CASE("substituted integral domain errors") {
  const Expr inv_y = parse("1/y");
  CHECK(code_of([&] { substituted_integral(inv_y, euler1(Conic(1, 0, -1), Sign::Plus), 0, 0.5, Sign::Plus); }) ==
        ErrorCode::DomainViolation);
  // euler4(1,0,1,+) on the lower branch over [-1, 1]: the t-image runs from 1+sqrt(2)
  // to -1-sqrt(2) and the integrand 2/(1 - t^2) has poles at +-1 in between.
  CHECK(code_of([&] { substituted_integral(inv_y, euler4(Conic(1, 0, 1), Sign::Plus), -1, 1, Sign::Minus); }) ==
        ErrorCode::PoleInInterval);
}

TEST_CASE("collapsed lines on degenerate conics") {
  // y^2 = 5/3 x^2 is the line pair y = +-sqrt(5/3) x. euler1+ sends the whole
  // upper-right line to t = 0, so no parameter arc can trace it.
  const Expr e = parse("x/(x^2 + 3/2)/(x^2 + 5/2)");
  const Conic k(Rational(5, 3), 0, 0);
  for (const char* m : {"euler1+", "tau", "point:3/8:+"}) {
    CAPTURE(m);
    CHECK(code_of([&] { substituted_integral(e, parametrize(k, Method::parse(m)), 0.375, 0.75, Sign::Plus); }) ==
          ErrorCode::ArcMismatch);
  }
  // the opposite sign family does trace it
  const double want = direct_integral(e, k, 0.375, 0.75, Sign::Plus);
  CHECK(std::abs(substituted_integral(e, euler1(k, Sign::Minus), 0.375, 0.75, Sign::Plus) - want) < 1e-9);
}

TEST_CASE("conditioning near a high-order pole") {
  // the t-image sits just beside a repeated denominator root at t = -1
  const Expr e = parse("y*x^2");
  const Conic k(1, -2, 0);
  const double want = direct_integral(e, k, -2.625, -2.375, Sign::Plus);
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const double got = substituted_integral(e, generic_point(k, Rational(-21, 8), s), -2.625, -2.375, Sign::Plus);
    CHECK(std::abs(got - want) < 1e-11 * std::abs(want));
  }
}

TEST_CASE("orientation and additivity") {
  gen::Rng rng(51);
  const Conic k(1, 1, 1);
  const Expr e = parse("(x^2 + 1) / y + 2*y");
  for (MethodKind kind : gen::all_kinds()) {
    Method m = gen::method_of_kind(rng, kind);
    if (kind == MethodKind::Euler3) continue;  // disc < 0 here
    const Parameterization p = parametrize(k, m);
    CAPTURE(m.to_string());
    for (Sign branch : {Sign::Plus, Sign::Minus}) {
      double fwd, back, left, right;
      try {
        fwd = substituted_integral(e, p, -0.5, 1.5, branch);
        back = substituted_integral(e, p, 1.5, -0.5, branch);
        left = substituted_integral(e, p, -0.5, 0.25, branch);
        right = substituted_integral(e, p, 0.25, 1.5, branch);
      } catch (const Error& err) {
        // an anchor pole can legitimately sit inside the mapped interval
        CHECK(err.code() == ErrorCode::PoleInInterval);
        continue;
      }
      CHECK(fwd == doctest::Approx(-back).epsilon(1e-12));
      CHECK(std::abs(fwd - (left + right)) < 1e-10);
      const double direct = direct_integral(e, k, -0.5, 1.5, branch);
      CHECK(direct == doctest::Approx(-direct_integral(e, k, 1.5, -0.5, branch)).epsilon(1e-14));
      CHECK(std::abs(direct - direct_integral(e, k, -0.5, 0.25, branch) - direct_integral(e, k, 0.25, 1.5, branch)) <
            1e-10);
      CHECK(std::abs(fwd - direct) < 1e-9);
    }
  }
}

TEST_CASE("cross-method examples") {
  const CrossCheckReport r1 =
      cross_method_check(parse("1/y"), Conic(1, 0, 1), 0, 1, methods({"euler1+", "euler4+", "trig"}));
  CHECK(r1.methods.size() == 3);
  for (const MethodOutcome& m : r1.methods) CHECK(m.value.has_value());
  CHECK(r1.max_deviation < 1e-9);
  CHECK(r1.direct_deviation < 1e-9);

  const CrossCheckReport r2 = cross_method_check(parse("y"), Conic(-1, 0, 1), -1, 1,
                                                 methods({"euler2+", "euler3:1", "euler4+", "point:0:+"}));
  for (const MethodOutcome& m : r2.methods) CHECK(m.value.has_value());
  CHECK(r2.max_deviation < 1e-9);
  CHECK(r2.methods[1].method == Method::euler3(1));

  const CrossCheckReport r3 = cross_method_check(parse("1/y"), Conic(-1, 0, -1), 0, 1, standard_methods());
  CHECK_FALSE(r3.direct.has_value());
  CHECK(r3.direct_error == ErrorCode::DomainViolation);
  for (const MethodOutcome& m : r3.methods) {
    CAPTURE(m.method.to_string());
    REQUIRE(m.error.has_value());
    CHECK((*m.error == ErrorCode::PreconditionViolated || *m.error == ErrorCode::NoRealPoints));
  }
  CHECK(r3.max_deviation == 0.0);
}

TEST_CASE("cross-method check is deterministic") {
  const auto all = standard_methods();
  const CrossCheckReport a = cross_method_check(parse("x/y + y"), Conic(2, -1, 3), 0.25, 2, all);
  const CrossCheckReport b = cross_method_check(parse("x/y + y"), Conic(2, -1, 3), 0.25, 2, all);
  REQUIRE(a.methods.size() == b.methods.size());
  for (std::size_t i = 0; i < a.methods.size(); ++i) {
    CHECK(a.methods[i].method == all[i]);
    CHECK(a.methods[i].value == b.methods[i].value);
    CHECK(a.methods[i].error == b.methods[i].error);
  }
  CHECK(a.max_deviation == b.max_deviation);
}
