#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulersub/conic.hpp"
#include "eulersub/rat_func.hpp"

namespace eulersub {

/// "+" always selects the upper-half-plane anchor (y0 >= 0).
enum class Sign { Plus, Minus };

inline Rational sign_factor(Sign s) { return s == Sign::Plus ? Rational(1) : Rational(-1); }
inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

enum class MethodKind {
  Euler1,        // y = +-x sqrt(a) + t
  Euler2,        // y = x t +- sqrt(c)
  Euler3,        // y = (x - x_k) t
  Euler4,        // y = +-sqrt(q) + (x - p) t
  GenericPoint,  // y - y0 = t (x - x0)
  OriginalEuler, // y = x sqrt(a) - t sqrt(c), rescaled
  Tau,           // tau = 2 t sqrt(a) - b on top of Euler1(+)
  TrigHyperbolic,
};

/// Normal form selected by the trigonometric/hyperbolic route.
enum class TrigCase {
  Circle,  // xi = cos, eta = sin   (a < 0, q > 0)
  Sinh,    // xi = sinh, eta = cosh (a > 0, q > 0)
  Cosh,    // xi = cosh, eta = sinh (a > 0, q < 0)
};

struct Method {
  MethodKind kind = MethodKind::Euler1;
  Sign sign = Sign::Plus;
  int root_index = 1;  // Euler3 only
  Rational x0;         // GenericPoint only

  static Method euler1(Sign s) { return {MethodKind::Euler1, s, 1, {}}; }
  static Method euler2(Sign s) { return {MethodKind::Euler2, s, 1, {}}; }
  static Method euler3(int root) { return {MethodKind::Euler3, Sign::Plus, root, {}}; }
  static Method euler4(Sign s) { return {MethodKind::Euler4, s, 1, {}}; }
  static Method point(Rational x0, Sign s) { return {MethodKind::GenericPoint, s, 1, std::move(x0)}; }
  static Method original() { return {MethodKind::OriginalEuler, Sign::Plus, 1, {}}; }
  static Method tau() { return {MethodKind::Tau, Sign::Plus, 1, {}}; }
  static Method trig() { return {MethodKind::TrigHyperbolic, Sign::Plus, 1, {}}; }

  /// CLI syntax: euler1+ euler1- euler2+ euler2- euler3:1 euler3:2 euler4+ euler4-
  /// point:<x0>:+ point:<x0>:- original tau trig. Case-sensitive; anything else
  /// throws InvalidArgument.
  static Method parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Method&, const Method&) = default;
};

/// Every method string accepted by Method::parse except point:<x0>:<sign>.
std::vector<Method> standard_methods();

/**
 * A rational parameterization t -> (x(t), y(t)) of y^2 = a x^2 + b x + c.
 *
 * Exact parameterizations carry canonical RatFuncs over Q(sqrt(radicand)).
 * The trigonometric route with non-square |a| needs two unrelated surds; it is
 * stored with double coefficients only and reports exact() == false.
 */
class Parameterization {
 public:
  const Method& method() const noexcept { return method_; }
  const Conic& conic() const noexcept { return conic_; }
  const Rational& radicand() const noexcept { return radicand_; }
  bool exact() const noexcept { return exact_; }
  std::optional<TrigCase> trig_case() const noexcept { return trig_case_; }

  /// Throw InexactParameterization when exact() is false.
  const RatFunc& x_of_t() const;
  const RatFunc& y_of_t() const;
  const RatFunc& dxdt() const;

  /// Double-precision views, available in both modes.
  const NumericRatFunc& numeric_x() const noexcept { return numeric_x_; }
  const NumericRatFunc& numeric_y() const noexcept { return numeric_y_; }
  const NumericRatFunc& numeric_dxdt() const noexcept { return numeric_dxdt_; }

  /// The chord pencil's base point; nullopt means "at infinity" (parallel chords).
  const std::optional<CurvePoint>& anchor() const noexcept { return anchor_; }
  /// Anchor as doubles; only meaningful when anchor() is set.
  std::pair<double, double> numeric_anchor() const noexcept { return numeric_anchor_; }

  /**
   * Limit parameter of the anchor itself (the tangent direction there).
   * +inf when the anchor sits at t = infinity, NaN when there is no finite
   * anchor or the limit is ambiguous.
   */
  double anchor_parameter() const noexcept { return anchor_parameter_; }

  /// Inverse of the defining relation. Throws AnchorPoint when the formula's
  /// denominator vanishes.
  QuadNum t_from_point(const QuadNum& x, const QuadNum& y) const;
  /// Floating inverse. Returns +inf for the point that sits at t = infinity and
  /// throws AnchorPoint when numerator and denominator both vanish.
  double t_from_point(double x, double y) const;

  /// Human-readable note on where the parameterization is valid.
  const std::string& domain_note() const noexcept { return domain_note_; }

 private:
  friend class ParameterizationBuilder;
  Parameterization(Method method, Conic conic) : method_(std::move(method)), conic_(std::move(conic)) {}

  Method method_;
  Conic conic_;
  Rational radicand_;
  bool exact_ = true;
  std::optional<TrigCase> trig_case_;
  RatFunc x_, y_, dxdt_;
  NumericRatFunc numeric_x_, numeric_y_, numeric_dxdt_;
  std::optional<CurvePoint> anchor_;
  std::pair<double, double> numeric_anchor_{0.0, 0.0};
  double anchor_parameter_ = 0.0;
  std::string domain_note_;
};

Parameterization euler1(const Conic& conic, Sign sign);
Parameterization euler2(const Conic& conic, Sign sign);
Parameterization euler3(const Conic& conic, int root_index);
Parameterization euler4(const Conic& conic, Sign sign);
Parameterization generic_point(const Conic& conic, const Rational& x0, Sign sign);
Parameterization original_euler(const Conic& conic);
Parameterization tau_reparam(const Conic& conic);
Parameterization trig_param(const Conic& conic);

/// Dispatch on method.kind.
Parameterization parametrize(const Conic& conic, const Method& method);

}  // namespace eulersub
