#pragma once

#include <string>
#include <vector>

#include "tropical/intersection.hpp"
#include "tropical/valued_poly.hpp"

namespace tropical::fixtures {

// x + 1 - y, all valuations 0.
ValuedLaurentPoly line_poly();
// y - a x^2.
ValuedLaurentPoly parabola(const Rational& nu_a);
// y - a x - b.
ValuedLaurentPoly affine_line(const Rational& nu_a, const Rational& nu_b);
// z^2 - 1 + a(xy + x + y + 1) with nu(a) = 1.
ValuedLaurentPoly quadric_with_double_facet();
// (x+1)(y+1) + (x+z)(y+z+a) with nu(a) = 1, expanded.
ValuedLaurentPoly quadric_cone();
// The line R e_axis through the origin, multiplicity 1.
WeightedComplex coordinate_line(std::size_t n, std::size_t axis);

struct ExampleOutcome {
  std::string id;
  bool matches = false;
  std::string expected;
  std::string computed;
};

std::vector<std::string> example_ids();
// Throws InvalidArgument for an unknown id.
ExampleOutcome run_example(const std::string& id);

// Points and multiplicities of a 0-dimensional complex, as "{(x,y):m, ...}".
std::string describe_points(const WeightedComplex& c);

}  // namespace tropical::fixtures
