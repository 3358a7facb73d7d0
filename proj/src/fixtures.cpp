#include "tropical/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "tropical/error.hpp"

namespace tropical::fixtures {

namespace {

IntegerVector iv(std::initializer_list<long> c) { return make_integer_vector(c); }
RationalVector rv(std::initializer_list<long> c) { return make_rational_vector(c); }

ValuedLaurentPoly poly(std::size_t n, const std::vector<std::pair<IntegerVector, Rational>>& terms) {
  ValuedLaurentPoly f(n);
  for (const auto& [u, v] : terms) f.add_term(u, v);
  return f;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string describe_report(const LiftReport& r) {
  return std::string(verdict_name(r.verdict)) + " proper=" + yes_no(r.proper) + " simple_ambient=" + yes_no(r.simple_ambient) +
         " multiplicity=" + r.total_multiplicity.get_str();
}

ExampleOutcome compare(const std::string& id, const std::string& expected, const std::string& computed) {
  return {id, expected == computed, expected, computed};
}

// Stable intersection of x + 1 - y with y - a x^2.
ExampleOutcome parabola_case(const std::string& id, const Rational& nu_a, const std::string& expected,
                             const RationalVector* lift_point, const std::string& expected_lift) {
  const auto line = tropicalize(line_poly());
  const auto par = tropicalize(parabola(nu_a));
  std::string computed = describe_points(stable_intersection(line, par));
  std::string want = expected;
  if (lift_point) {
    computed += " | " + describe_report(lifting_report(line, par, *lift_point));
    want += " | " + expected_lift;
  }
  return compare(id, want, computed);
}

ExampleOutcome overlapping_lines() {
  const auto x = tropicalize(line_poly());
  const auto xp = tropicalize(affine_line(0, 1));
  const PolyhedralComplex meet = set_intersection(x, xp);
  std::ostringstream computed;
  const auto top = meet.maximal_cells();
  const Polyhedron ray = Polyhedron::from_generators(2, {rv({0, 0})}, {iv({-1, -1})});
  computed << "set=" << (top.size() == 1 && meet.cell(top[0]) == ray ? "ray R<=0(1,1)" : "other");
  bool improper_everywhere = true;
  for (const RationalVector& w : {rv({0, 0}), rv({-1, -1}), RationalVector{Rational(-5, 2), Rational(-5, 2)}, rv({-40, -40})})
    improper_everywhere = improper_everywhere && !check_proper(x, xp, w);
  computed << " proper_on_ray=" << (improper_everywhere ? "never" : "somewhere");
  computed << " stable=" << describe_points(stable_intersection(x, xp));
  computed << " | " << describe_report(lifting_report(x, xp, rv({-1, -1})));
  return compare("6.2", "set=ray R<=0(1,1) proper_on_ray=never stable={(0,0):1} | NO_GUARANTEE proper=false simple_ambient=true multiplicity=0",
                 computed.str());
}

ExampleOutcome quadric_double_facet() {
  const auto y = tropicalize(quadric_with_double_facet());
  const RationalVector origin = rv({0, 0, 0});
  std::string facet = "none";
  for (std::size_t id : y.facets())
    if (y.cell(id).in_relative_interior(origin)) facet = y.multiplicity(id).get_str();
  const auto x = coordinate_line(3, 1);
  const auto xp = coordinate_line(3, 0);
  std::string computed = "facet_multiplicity=" + facet + " simple=" + yes_no(is_simple_point(y, origin)) + " | " +
                         describe_report(lifting_report(x, xp, origin, &y));
  return compare("6.4", "facet_multiplicity=2 simple=false | NO_GUARANTEE proper=true simple_ambient=false multiplicity=1",
                 computed);
}

ExampleOutcome quadric_cone_case() {
  const auto y = tropicalize(quadric_cone());
  const RationalVector origin = rv({0, 0, 0});
  const auto x = coordinate_line(3, 1);
  const auto xpp = coordinate_line(3, 0);
  std::string computed = "simple=" + yes_no(is_simple_point(y, origin)) + " | " + describe_report(lifting_report(x, xpp, origin, &y));
  return compare("6.5", "simple=false | NO_GUARANTEE proper=true simple_ambient=false multiplicity=0", computed);
}

}  // namespace

ValuedLaurentPoly line_poly() { return poly(2, {{iv({1, 0}), 0}, {iv({0, 0}), 0}, {iv({0, 1}), 0}}); }

ValuedLaurentPoly parabola(const Rational& nu_a) { return poly(2, {{iv({0, 1}), 0}, {iv({2, 0}), nu_a}}); }

ValuedLaurentPoly affine_line(const Rational& nu_a, const Rational& nu_b) {
  return poly(2, {{iv({0, 1}), 0}, {iv({1, 0}), nu_a}, {iv({0, 0}), nu_b}});
}

ValuedLaurentPoly quadric_with_double_facet() {
  // The constant term is a - 1, of valuation 0.
  return poly(3, {{iv({0, 0, 2}), 0}, {iv({0, 0, 0}), 0}, {iv({1, 1, 0}), 1}, {iv({1, 0, 0}), 1}, {iv({0, 1, 0}), 1}});
}

ValuedLaurentPoly quadric_cone() {
  // 2xy + (1+a)x + y + 1 + xz + yz + z^2 + az
  return poly(3, {{iv({1, 1, 0}), 0},
                  {iv({1, 0, 0}), 0},
                  {iv({0, 1, 0}), 0},
                  {iv({0, 0, 0}), 0},
                  {iv({1, 0, 1}), 0},
                  {iv({0, 1, 1}), 0},
                  {iv({0, 0, 2}), 0},
                  {iv({0, 0, 1}), 1}});
}

WeightedComplex coordinate_line(std::size_t n, std::size_t axis) {
  IntegerVector e(n);
  e.at(axis) = 1;
  return WeightedComplex::from_facets(n, 1, {{Polyhedron::cone(n, {}, {e}), Integer(1)}});
}

std::vector<std::string> example_ids() { return {"6.1a", "6.1b", "6.1c", "6.2", "6.4", "6.5"}; }

ExampleOutcome run_example(const std::string& id) {
  if (id == "6.1a") return parabola_case(id, 1, "{(-1,-1):1, (0,1):1}", nullptr, "");
  if (id == "6.1b") return parabola_case(id, -1, "{(1/2,0):2}", nullptr, "");
  if (id == "6.1c") {
    const RationalVector origin = rv({0, 0});
    return parabola_case(id, 0, "{(0,0):2}", &origin, "LIFTS proper=true simple_ambient=true multiplicity=2");
  }
  if (id == "6.2") return overlapping_lines();
  if (id == "6.4") return quadric_double_facet();
  if (id == "6.5") return quadric_cone_case();
  throw TropicalError(ErrorKind::InvalidArgument, "unknown example id '" + id + "'");
}

std::string describe_points(const WeightedComplex& c) {
  std::vector<std::pair<RationalVector, Integer>> pts;
  for (std::size_t id : c.facets()) {
    if (c.cell(id).dim() != 0) continue;
    pts.emplace_back(c.cell(id).vertices()[0], c.multiplicity(id));
  }
  std::sort(pts.begin(), pts.end());
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i)
    out += (i ? ", " : "") + to_string(pts[i].first) + ":" + pts[i].second.get_str();
  return out + "}";
}

}  // namespace tropical::fixtures
