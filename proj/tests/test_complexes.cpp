#include "doctest.h"
#include "tropical/complex.hpp"
#include "tropical/error.hpp"

using namespace tropical;

namespace {

IntegerVector iv(std::initializer_list<long> c) { return make_integer_vector(c); }
RationalVector rv(std::initializer_list<long> c) { return make_rational_vector(c); }

Polyhedron ray_from(RationalVector apex, IntegerVector dir) { return Polyhedron::from_generators(apex.size(), {apex}, {dir}); }

WeightedComplex tropical_line(long m1 = 1, long m2 = 1, long m3 = 1, RationalVector apex = rv({0, 0})) {
  return WeightedComplex::from_facets(2, 1,
                                      {{ray_from(apex, iv({1, 0})), Integer(m1)},
                                       {ray_from(apex, iv({0, 1})), Integer(m2)},
                                       {ray_from(apex, iv({-1, -1})), Integer(m3)}});
}

// The line w2 = 2 w1 + 1.
WeightedComplex parabola_line() {
  return WeightedComplex::from_facets(2, 1, {{Polyhedron::from_generators(2, {rv({0, 1})}, {}, {iv({1, 2})}), Integer(1)}});
}

// Tropical line with vertex (1,1).
WeightedComplex shifted_line() { return tropical_line(1, 1, 1, rv({1, 1})); }

}  // namespace

TEST_CASE("validate: tropical line, crossing rays, zero multiplicity") {
  CHECK(validate(tropical_line()).empty());

  auto crossing = WeightedComplex::from_facets(2, 1,
                                               {{ray_from(rv({-1, 0}), iv({1, 0})), Integer(1)},
                                                {ray_from(rv({0, -1}), iv({0, 1})), Integer(1)}});
  auto v = validate(crossing);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::ComplexCondition);
  CHECK(v[0].other != PolyhedralComplex::npos);

  auto zero = tropical_line(1, 0, 1);
  v = validate(zero);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::Multiplicity);
}

TEST_CASE("validate: purity") {
  auto c = WeightedComplex::from_cells(2, 1, {ray_from(rv({0, 0}), iv({1, 0})), Polyhedron::point(rv({5, 5}))},
                                       {{ray_from(rv({0, 0}), iv({1, 0})), Integer(1)}});
  auto v = validate(c);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::Purity);
}

TEST_CASE("complex structure: face closure and incidence") {
  auto c = tropical_line();
  CHECK(c.cells().cells().size() == 4);
  CHECK(c.facets().size() == 3);
  CHECK(c.cells().maximal_cells().size() == 3);
  CHECK(c.total_multiplicity() == 3);
  CHECK(c.is_fan());
  CHECK_FALSE(shifted_line().is_fan());
  std::size_t origin = c.cells().find(Polyhedron::point(rv({0, 0})));
  REQUIRE(origin != PolyhedralComplex::npos);
  for (std::size_t f : c.facets()) CHECK(c.cells().facets_of(f) == std::vector<std::size_t>{origin});

  auto square = WeightedComplex::from_facets(
      2, 2, {{Polyhedron::from_generators(2, {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})}), Integer(1)}});
  CHECK(square.cells().cells().size() == 9);
  CHECK(validate(square).empty());
}

TEST_CASE("star at a vertex, on a ray and on an affine line") {
  auto line = tropical_line();
  CHECK(weighted_supports_equal(star(line, rv({0, 0})), line));

  auto s = star(line, rv({2, 0}));
  REQUIRE(s.facets().size() == 1);
  CHECK(s.cell(s.facets()[0]) == Polyhedron::cone(2, {}, {iv({1, 0})}));
  CHECK(s.multiplicity(s.facets()[0]) == 1);
  CHECK(s.is_fan());

  s = star(parabola_line(), rv({0, 1}));
  REQUIRE(s.facets().size() == 1);
  CHECK(s.cell(s.facets()[0]) == Polyhedron::cone(2, {}, {iv({1, 2})}));

  CHECK_THROWS_AS(star(line, rv({1, 1})), TropicalError);
}

TEST_CASE("balancing: tropical line and unbalanced weights") {
  CHECK(check_balancing(tropical_line()).empty());
  auto v = check_balancing(tropical_line(1, 1, 2));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::Balancing);
  CHECK(v[0].cell == tropical_line().cells().find(Polyhedron::point(rv({0, 0}))));

  // Uniform scaling keeps balance.
  CHECK(check_balancing(tropical_line(2, 2, 2)).empty());
  // (-1,0) + 2(0,-1) + (1,2) = 0.
  auto conic = WeightedComplex::from_facets(2, 1,
                                            {{ray_from(rv({0, 0}), iv({-1, 0})), Integer(1)},
                                             {ray_from(rv({0, 0}), iv({0, -1})), Integer(2)},
                                             {ray_from(rv({0, 0}), iv({1, 2})), Integer(1)}});
  CHECK(check_balancing(conic).empty());

  // A single segment is not balanced at either end.
  auto seg = WeightedComplex::from_facets(2, 1, {{Polyhedron::from_generators(2, {rv({0, 0}), rv({1, 0})}), Integer(1)}});
  CHECK(check_balancing(seg).size() == 2);
}

TEST_CASE("balancing in a 2-dimensional fan in R^3") {
  // The tropical plane x + y + z + 1: cones over pairs of e1, e2, e3, -(e1+e2+e3).
  std::vector<IntegerVector> rays{iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -1})};
  std::vector<std::pair<Polyhedron, Integer>> facets;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) facets.emplace_back(Polyhedron::cone(3, {rays[i], rays[j]}), Integer(1));
  auto plane = WeightedComplex::from_facets(3, 2, facets);
  CHECK(validate(plane).empty());
  CHECK(check_balancing(plane).empty());
  facets[0].second = 3;
  CHECK_FALSE(check_balancing(WeightedComplex::from_facets(3, 2, facets)).empty());
}

TEST_CASE("simple points") {
  CHECK(is_simple_point(WeightedComplex::whole_space(2), rv({7, -3})));
  CHECK(is_simple_point(WeightedComplex::whole_space(3), rv({0, 0, 0})));
  CHECK_FALSE(is_simple_point(tropical_line(), rv({0, 0})));
  CHECK(is_simple_point(tropical_line(), rv({2, 0})));
  CHECK_FALSE(is_simple_point(tropical_line(2, 1, 1), rv({2, 0})));
  CHECK_FALSE(is_simple_point(tropical_line(), rv({2, 2})));
}

TEST_CASE("codim_at") {
  CHECK(codim_at(tropical_line(), rv({2, 0})) == 1);
  auto pt = WeightedComplex::from_facets(2, 0, {{Polyhedron::point(rv({0, 0})), Integer(1)}});
  CHECK(codim_at(pt, rv({0, 0})) == 2);
  auto ray = set_intersection(tropical_line(), shifted_line());
  CHECK(codim_at(ray, rv({-1, -1})) == 1);
  CHECK_THROWS_AS(codim_at(tropical_line(), rv({1, 1})), TropicalError);
}

TEST_CASE("set_intersection: two points, a ray, self") {
  auto two = set_intersection(tropical_line(), parabola_line());
  REQUIRE(two.cells().size() == 2);
  CHECK(two.find(Polyhedron::point(rv({0, 1}))) != PolyhedralComplex::npos);
  CHECK(two.find(Polyhedron::point(rv({-1, -1}))) != PolyhedralComplex::npos);

  auto ray = set_intersection(tropical_line(), shifted_line());
  REQUIRE(ray.maximal_cells().size() == 1);
  CHECK(ray.cell(ray.maximal_cells()[0]) == ray_from(rv({0, 0}), iv({-1, -1})));

  auto self = set_intersection(tropical_line(), tropical_line());
  CHECK(self.cells().size() == tropical_line().cells().cells().size());
}

TEST_CASE("supports_equal: refinement and translation") {
  auto line = tropical_line();
  // Subdivide each ray at distance one and cut the (-1,-1) ray twice.
  auto refined = WeightedComplex::from_facets(
      2, 1,
      {{Polyhedron::from_generators(2, {rv({0, 0}), rv({1, 0})}), Integer(1)},
       {ray_from(rv({1, 0}), iv({1, 0})), Integer(1)},
       {Polyhedron::from_generators(2, {rv({0, 0}), rv({0, 1})}), Integer(1)},
       {ray_from(rv({0, 1}), iv({0, 1})), Integer(1)},
       {Polyhedron::from_generators(2, {rv({0, 0}), rv({-1, -1})}), Integer(1)},
       {Polyhedron::from_generators(2, {rv({-1, -1}), rv({-3, -3})}), Integer(1)},
       {ray_from(rv({-3, -3}), iv({-1, -1})), Integer(1)}});
  CHECK(validate(refined).empty());
  CHECK(check_balancing(refined).empty());
  CHECK(supports_equal(line, refined));
  CHECK(weighted_supports_equal(line, refined));
  CHECK(weighted_supports_equal(refined, line));
  CHECK_FALSE(supports_equal(line, tropical_line(1, 1, 1, rv({1, 0}))));
  CHECK(supports_equal(line, tropical_line(2, 1, 1)));
  CHECK_FALSE(weighted_supports_equal(line, tropical_line(2, 1, 1)));
  // A proper subset is not equal.
  auto two_rays = WeightedComplex::from_facets(2, 1,
                                               {{ray_from(rv({0, 0}), iv({1, 0})), Integer(1)},
                                                {ray_from(rv({0, 0}), iv({0, 1})), Integer(1)}});
  CHECK_FALSE(supports_equal(line, two_rays));
  CHECK_FALSE(supports_equal(two_rays, line));
}

TEST_CASE("supports_equal: 2-dimensional refinement") {
  auto square = WeightedComplex::from_facets(
      2, 2, {{Polyhedron::from_generators(2, {rv({0, 0}), rv({2, 0}), rv({0, 2}), rv({2, 2})}), Integer(1)}});
  auto halves = WeightedComplex::from_facets(
      2, 2,
      {{Polyhedron::from_generators(2, {rv({0, 0}), rv({2, 0}), rv({0, 2})}), Integer(1)},
       {Polyhedron::from_generators(2, {rv({2, 2}), rv({2, 0}), rv({0, 2})}), Integer(1)}});
  auto one_half = WeightedComplex::from_facets(
      2, 2, {{Polyhedron::from_generators(2, {rv({0, 0}), rv({2, 0}), rv({0, 2})}), Integer(1)}});
  CHECK(supports_equal(square, halves));
  CHECK(weighted_supports_equal(halves, square));
  CHECK_FALSE(supports_equal(square, one_half));
  CHECK(supports_equal(WeightedComplex::whole_space(2), WeightedComplex::whole_space(2)));
}

TEST_CASE("property: star preserves balancing and codim on facet interiors") {
  auto line = tropical_line();
  for (const RationalVector& w : {rv({0, 0}), rv({3, 0}), rv({0, 5}), rv({-2, -2})}) {
    auto s = star(line, w);
    CHECK(check_balancing(s).empty());
    CHECK(validate(s).empty());
    CHECK(codim_at(line, w) <= 2);
  }
  CHECK(codim_at(line, rv({3, 0})) == 1);
}
