#pragma once

#include <string>
#include <vector>

#include "tropical/complex.hpp"

namespace tropical {

// Visible box [x0, x1] x [y0, y1]. One unit is 100 SVG pixels.
struct Window {
  Rational x0 = -3, x1 = 3, y0 = -3, y1 = 3;
};

// "x0,x1,y0,y1"; throws std::invalid_argument.
Window parse_window(const std::string& text);

// Planar complexes drawn on top of each other, one colour per layer.
// Facets of multiplicity m > 1 get stroke width 2m and a label "m".
// Throws UnsupportedDimension unless every layer lives in R^2.
std::string render_svg(const std::vector<WeightedComplex>& layers, const Window& window);
inline std::string render_svg(const WeightedComplex& c, const Window& window) {
  return render_svg(std::vector<WeightedComplex>{c}, window);
}

}  // namespace tropical
