#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eulersub/expr.hpp"
#include "eulersub/substitution.hpp"

namespace eulersub {

struct QuadratureConfig {
  int nodes_per_panel = 32;
  int panels = 64;
  double pole_floor = kDefaultPoleFloor;

  /// Throws InvalidArgument unless nodes_per_panel is in [2, 128] and panels >= 1.
  void validate() const;
};

/// Composite Gauss-Legendre on [lo, hi] with equal panels. Nodes never touch the
/// endpoints. Throws NonFiniteEvaluation if f returns NaN or inf at a node.
double gauss_legendre(const std::function<double(double)>& f, double lo, double hi,
                      const QuadratureConfig& cfg = {});

/// Ground truth: integral of R(x, branch * sqrt(a x^2 + b x + c)) dx from x_lo to x_hi.
/// Either orientation is allowed.
double direct_integral(const Expr& e, const Conic& conic, double x_lo, double x_hi, Sign branch,
                       const QuadratureConfig& cfg = {});

/**
 * The same integral computed in the parameter of `param`.
 *
 * Endpoints map to parameters through the floating inverse; an endpoint at the
 * anchor takes the anchor's limit parameter. The parameter line is closed into
 * a circle through theta = 2 atan(t) and the arc whose image is the requested
 * piece of the curve is integrated, so pieces that pass through t = infinity
 * are handled as well as ordinary intervals.
 *
 * Throws PoleInInterval if the rationalized integrand has a real pole on that
 * arc, ArcMismatch if neither arc traces the requested piece, and AnchorPoint if
 * an endpoint is the anchor and its limit parameter is undefined.
 */
double substituted_integral(const Expr& e, const Parameterization& param, double x_lo, double x_hi,
                            Sign branch, const QuadratureConfig& cfg = {});

struct MethodOutcome {
  Method method;
  std::optional<double> value;
  std::optional<ErrorCode> error;
  std::string message;  // error text when error is set
};

struct CrossCheckReport {
  std::optional<double> direct;
  std::optional<ErrorCode> direct_error;
  std::string direct_message;
  std::vector<MethodOutcome> methods;  // in request order
  double max_deviation = 0.0;     // pairwise, successful methods only
  double direct_deviation = 0.0;  // max |method - direct|; 0 when direct failed
};

/// Runs every method (concurrently) and the direct oracle. Failures are recorded
/// per method and never abort the others. The result does not depend on scheduling.
CrossCheckReport cross_method_check(const Expr& e, const Conic& conic, double x_lo, double x_hi,
                                    const std::vector<Method>& methods, Sign branch = Sign::Plus,
                                    const QuadratureConfig& cfg = {});

}  // namespace eulersub
