#include <random>

#include "doctest.h"
#include "random_inputs.hpp"
#include "tropical/error.hpp"
#include "tropical/fixtures.hpp"
#include "tropical/io.hpp"
#include "tropical/svg.hpp"

using namespace tropical;
using io::Json;

namespace {

RationalVector rv(std::initializer_list<long> c) { return make_rational_vector(c); }

WeightedComplex round_trip(const WeightedComplex& c) { return io::complex_from_json(Json::parse(io::to_json(c).dump())); }

void check_round_trip(const WeightedComplex& c) {
  const WeightedComplex back = round_trip(c);
  CHECK(back.dim() == c.dim());
  CHECK(back.ambient_dim() == c.ambient_dim());
  CHECK(supports_equal(c, back));
  CHECK(weighted_supports_equal(c, back));
  REQUIRE(back.facets().size() == c.facets().size());
  for (std::size_t id : c.facets()) {
    const std::size_t other = back.cells().find(c.cell(id));
    REQUIRE(other != PolyhedralComplex::npos);
    CHECK(back.multiplicity(other) == c.multiplicity(id));
  }
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

std::vector<WeightedComplex> fixture_complexes() {
  using namespace fixtures;
  std::vector<WeightedComplex> out = {tropicalize(line_poly()),
                                      tropicalize(parabola(1)),
                                      tropicalize(parabola(-1)),
                                      tropicalize(parabola(0)),
                                      tropicalize(affine_line(0, 1)),
                                      tropicalize(quadric_with_double_facet()),
                                      tropicalize(quadric_cone()),
                                      coordinate_line(3, 0),
                                      coordinate_line(3, 1),
                                      WeightedComplex::whole_space(2),
                                      WeightedComplex(2, 0)};
  out.push_back(stable_intersection(out[0], out[2]));
  out.push_back(stable_intersection(out[0], out[1]));
  return out;
}

}  // namespace

TEST_CASE("complex round trip on fixtures") {
  for (const auto& c : fixture_complexes()) check_round_trip(c);
}

TEST_CASE("complex round trip on random hypersurfaces") {
  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) check_round_trip(tropicalize(testing::random_poly(rng, 2 + i % 2, 2, 6)));
}

TEST_CASE("polynomial round trip keeps terms, valuations and tags") {
  ValuedLaurentPoly f(2);
  f.add_term(make_integer_vector({1, -2}), Rational(3, 4), "a");
  f.add_term(make_integer_vector({0, 0}), Rational(-1));
  const ValuedLaurentPoly g = io::poly_from_json(Json::parse(io::to_json(f).dump()));
  REQUIRE(g.size() == 2);
  CHECK(g.valuation(make_integer_vector({1, -2})) == Rational(3, 4));
  CHECK(g.tag(make_integer_vector({1, -2})) == "a");
  CHECK(g.valuation(make_integer_vector({0, 0})) == -1);
}

TEST_CASE("rational fields are strings or integers") {
  CHECK(io::rational_from_json(Json("-6/4")) == Rational(-3, 2));
  CHECK(io::rational_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(io::rational_from_json(Json(0.5)), io::ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), io::ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json("x")), io::ParseError);
  CHECK(io::parse_point("1/2,-3") == RationalVector{Rational(1, 2), Rational(-3)});
  CHECK_THROWS_AS(io::parse_point("1,,2"), io::ParseError);
}

TEST_CASE("malformed files are parse errors") {
  CHECK_THROWS_AS(io::poly_from_json(Json::parse(R"({"terms": []})")), io::ParseError);
  CHECK_THROWS_AS(io::poly_from_json(Json::parse(R"({"n": 2, "terms": [{"exp": [1], "val": "0"}]})")), io::ParseError);
  CHECK_THROWS_AS(io::poly_from_json(Json::parse(R"({"n": 1, "terms": [{"exp": [1], "val": "0"}, {"exp": [1], "val": "1"}]})")),
                  io::ParseError);
  CHECK_THROWS_AS(io::poly_from_json(Json::parse(R"({"n": 1, "terms": [{"exp": [1.5], "val": "0"}]})")), io::ParseError);
  CHECK_THROWS_AS(io::complex_from_json(Json::parse(R"({"n": 2, "dim": 1, "cells": [], "multiplicities": [{"cell": 3, "m": 1}]})")),
                  io::ParseError);
  CHECK_THROWS_AS(io::complex_from_json(Json::parse(R"({"n": 2, "dim": 1, "cells": 4})")), io::ParseError);
  CHECK_THROWS_AS(io::polytopes_from_json(Json::parse(R"({"n": 2, "polytopes": [{"vertices": []}]})")), io::ParseError);
}

TEST_CASE("loaded complexes with a bad multiplicity fail validation") {
  const Json j = Json::parse(R"({"n": 1, "dim": 0, "cells": [{"eqs": [{"normal": [1], "offset": "0"}]}],
                                 "multiplicities": [{"cell": 0, "m": 0}]})");
  CHECK_FALSE(validate(io::complex_from_json(j)).empty());
}

TEST_CASE("polytope file and mixed volume") {
  const Json j = Json::parse(R"({"n": 2, "polytopes": [{"vertices": [[0, 0], [1, 0], [0, 1]]},
                                                       {"vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}]})");
  CHECK(mixed_volume(io::polytopes_from_json(j)) == 1);
}

TEST_CASE("svg of the tropical line") {
  const std::string svg = render_svg(tropicalize(fixtures::line_poly()), Window{-3, 3, -3, 3});
  CHECK(count(svg, "<line ") == 3);
  CHECK(count(svg, "<circle ") == 1);
  CHECK(svg.find("<svg ") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("cx=\"300.00\" cy=\"300.00\"") != std::string::npos);
  CHECK(svg.find("x1=\"0.00\" y1=\"600.00\" x2=\"300.00\" y2=\"300.00\"") != std::string::npos);
}

TEST_CASE("svg overlay of a line and a parabola") {
  const auto line = tropicalize(fixtures::line_poly());
  const auto par = tropicalize(fixtures::parabola(-1));
  const std::string svg = render_svg({line, par}, Window{-3, 3, -3, 3});
  CHECK(count(svg, "<g ") == 2);
  CHECK(count(svg, "<line ") == 4);
  // The parabola's line 2x - y = 1 crosses the horizontal ray of the line at (1/2, 0).
  CHECK(svg.find("x1=\"200.00\" y1=\"600.00\" x2=\"500.00\" y2=\"0.00\"") != std::string::npos);
  CHECK(svg.find("x1=\"300.00\" y1=\"300.00\" x2=\"600.00\" y2=\"300.00\"") != std::string::npos);
  const auto meet = stable_intersection(line, par);
  CHECK(fixtures::describe_points(meet) == "{(1/2,0):2}");
  const std::string with_points = render_svg({line, par, meet}, Window{-3, 3, -3, 3});
  CHECK(with_points.find("cx=\"350.00\" cy=\"300.00\"") != std::string::npos);
  CHECK(count(with_points, ">2</text>") == 1);
}

TEST_CASE("svg marks higher multiplicities") {
  // x^2 + y^2: the line x = y with multiplicity 2.
  ValuedLaurentPoly f(2);
  f.add_term(make_integer_vector({2, 0}), 0);
  f.add_term(make_integer_vector({0, 2}), 0);
  const std::string svg = render_svg(tropicalize(f), Window{-3, 3, -3, 3});
  CHECK(svg.find("stroke-width=\"4\"") != std::string::npos);
  CHECK(count(svg, "</text>") == 1);
}

TEST_CASE("svg clips to the window") {
  const auto line = tropicalize(fixtures::line_poly());
  const std::string svg = render_svg(line, Window{1, 2, -1, 1});
  CHECK(count(svg, "<line ") == 1);
  CHECK(count(svg, "<circle ") == 0);
  CHECK(svg.find("x1=\"0.00\" y1=\"100.00\" x2=\"100.00\" y2=\"100.00\"") != std::string::npos);
}

TEST_CASE("svg of two-dimensional cells and empty complexes") {
  const std::string plane = render_svg(WeightedComplex::whole_space(2), Window{0, 1, 0, 1});
  CHECK(count(plane, "<polygon ") == 1);
  CHECK(plane.find("points=\"100.00,0.00 0.00,0.00 0.00,100.00 100.00,100.00\"") != std::string::npos);
  const std::string empty = render_svg(WeightedComplex(2, 1), Window{});
  CHECK(empty.find("<svg ") == 0);
  CHECK(empty.find("</svg>") != std::string::npos);
  CHECK(count(empty, "<line ") + count(empty, "<circle ") + count(empty, "<polygon ") == 0);
}

TEST_CASE("svg is deterministic and planar only") {
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto f = testing::random_poly(rng, 2, 2, 6);
    const auto c1 = tropicalize(f);
    const auto c2 = round_trip(c1);
    CHECK(render_svg(c1, Window{}) == render_svg(c1, Window{}));
    CHECK(render_svg(c1, Window{}) == render_svg(c2, Window{}));
  }
  CHECK_THROWS_AS(render_svg(fixtures::coordinate_line(3, 0), Window{}), TropicalError);
  CHECK(parse_window("-1/2,1,0,2").x0 == Rational(-1, 2));
  CHECK_THROWS(parse_window("1,0,0,1"));
  CHECK_THROWS(parse_window("0,1,0"));
}
