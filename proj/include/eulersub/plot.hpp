#pragma once

#include <string>
#include <vector>

#include "eulersub/substitution.hpp"

namespace eulersub {

struct PlotOptions {
  // Clipping window for unbounded curves; ellipses are fitted instead.
  double x_min = -5.0;
  double x_max = 5.0;
  std::vector<Rational> chord_parameters{Rational(-2), Rational(-1), Rational(-1, 2),
                                         Rational(1, 2), Rational(1), Rational(2)};
  int width = 640;
  int height = 640;
};

struct PlotResult {
  std::string svg;
  int chords = 0;
  std::vector<std::string> notices;  // skipped chord parameters and why
};

/// SVG of the conic, its characteristic points, the anchor and one chord per
/// usable sample parameter. Output depends only on the inputs.
PlotResult plot_svg(const Parameterization& param, const PlotOptions& options = {});

}  // namespace eulersub
