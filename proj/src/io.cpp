#include "tropical/io.hpp"

#include <fstream>
#include <sstream>

#include "tropical/error.hpp"

namespace tropical::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected an object with field '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field '" + std::string(key) + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError("field '" + std::string(key) + "' must be an array");
  return a;
}

Json optional_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) return Json::array();
  return array_field(j, key);
}

long long integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError("field '" + std::string(key) + "' must be an integer");
  return v.get<long long>();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Rational q = rational_from_json(j);
    if (q.get_den() != 1) throw ParseError("expected an integer, got '" + j.get<std::string>() + "'");
    return q.get_num();
  }
  throw ParseError("expected an integer");
}

IntegerVector integer_vector(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("expected an integer array of length " + std::to_string(n));
  IntegerVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

RationalVector rational_vector(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("expected an array of length " + std::to_string(n));
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json integer_array(const IntegerVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

Json constraints(const std::vector<Constraint>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back({{"normal", integer_array(c.normal)}, {"offset", c.offset.get_str()}});
  return a;
}

std::vector<Constraint> constraints_from_json(const Json& a, std::size_t n) {
  std::vector<Constraint> out;
  for (const auto& c : a) out.push_back({integer_vector(field(c, "normal"), n), rational_from_json(field(c, "offset"))});
  return out;
}

std::size_t dimension(const Json& j) {
  const long long n = integer_field(j, "n");
  if (n < 1) throw ParseError("field 'n' must be positive");
  return static_cast<std::size_t>(n);
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw ParseError("expected a rational string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

RationalVector parse_point(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (out.empty()) throw ParseError("empty point");
  return out;
}

Json to_json(const ValuedLaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json term{{"exp", integer_array(t.exponent)}, {"val", t.valuation.get_str()}};
    if (!t.tag.empty()) term["tag"] = t.tag;
    terms.push_back(term);
  }
  return {{"n", f.ambient_dim()}, {"terms", terms}};
}

ValuedLaurentPoly poly_from_json(const Json& j) {
  return guarded([&] {
    const std::size_t n = dimension(j);
    ValuedLaurentPoly f(n);
    for (const auto& t : array_field(j, "terms")) {
      std::string tag;
      if (t.contains("tag")) {
        if (!t["tag"].is_string()) throw ParseError("field 'tag' must be a string");
        tag = t["tag"].get<std::string>();
      }
      IntegerVector u = integer_vector(field(t, "exp"), n);
      if (f.has_term(u)) throw ParseError("repeated exponent " + to_string(u));
      f.add_term(std::move(u), rational_from_json(field(t, "val")), tag);
    }
    return f;
  });
}

Json to_json(const Polyhedron& p) { return {{"ineqs", constraints(p.h().inequalities)}, {"eqs", constraints(p.h().equations)}}; }

Polyhedron polyhedron_from_json(const Json& j, std::size_t n) {
  return guarded([&] {
    HPolyhedron h;
    h.ambient_dim = n;
    h.inequalities = constraints_from_json(optional_array(j, "ineqs"), n);
    h.equations = constraints_from_json(optional_array(j, "eqs"), n);
    return Polyhedron::from_h(h);
  });
}

Json to_json(const WeightedComplex& c) {
  Json cells = Json::array();
  Json mults = Json::array();
  for (std::size_t id : c.facets()) {
    mults.push_back({{"cell", cells.size()}, {"m", integer_json(c.multiplicity(id))}});
    cells.push_back(to_json(c.cell(id)));
  }
  return {{"n", c.ambient_dim()}, {"dim", c.dim()}, {"cells", cells}, {"multiplicities", mults}};
}

WeightedComplex complex_from_json(const Json& j) {
  return guarded([&] {
    const std::size_t n = dimension(j);
    const long long dim = integer_field(j, "dim");
    if (dim < -1 || dim > static_cast<long long>(n)) throw ParseError("field 'dim' out of range");
    std::vector<Polyhedron> cells;
    for (const auto& c : array_field(j, "cells")) cells.push_back(polyhedron_from_json(c, n));
    std::map<Polyhedron, Integer> mults;
    for (const auto& m : optional_array(j, "multiplicities")) {
      const long long idx = integer_field(m, "cell");
      if (idx < 0 || static_cast<std::size_t>(idx) >= cells.size()) throw ParseError("multiplicity refers to a missing cell");
      const Polyhedron& cell = cells[static_cast<std::size_t>(idx)];
      if (cell.is_empty()) throw ParseError("multiplicity on an empty cell");
      mults[cell] += integer_from_json(field(m, "m"));
    }
    return WeightedComplex::from_cells(n, static_cast<int>(dim), cells, mults);
  });
}

Json to_json(const PolyhedralComplex& c) {
  Json cells = Json::array();
  for (std::size_t id : c.maximal_cells()) cells.push_back(to_json(c.cell(id)));
  return {{"n", c.ambient_dim()}, {"dim", c.dim()}, {"cells", cells}};
}

std::vector<Polyhedron> polytopes_from_json(const Json& j) {
  return guarded([&] {
    const std::size_t n = dimension(j);
    std::vector<Polyhedron> out;
    for (const auto& p : array_field(j, "polytopes")) {
      std::vector<RationalVector> pts;
      for (const auto& v : array_field(p, "vertices")) pts.push_back(rational_vector(v, n));
      if (pts.empty()) throw ParseError("polytope without vertices");
      out.push_back(Polyhedron::from_generators(n, pts));
    }
    return out;
  });
}

Json to_json(const std::vector<Violation>& violations) {
  Json a = Json::array();
  for (const auto& v : violations) {
    Json item{{"kind", std::string(violation_name(v.kind))}, {"cell", v.cell}};
    if (v.other != PolyhedralComplex::npos) item["other"] = v.other;
    item["message"] = v.message;
    a.push_back(item);
  }
  return a;
}

Json to_json(const LiftReport& r) {
  Json point = Json::array();
  for (const auto& x : r.point) point.push_back(x.get_str());
  return {{"point", point},
          {"proper", r.proper},
          {"simple_ambient", r.simple_ambient},
          {"verdict", std::string(verdict_name(r.verdict))},
          {"total_multiplicity", r.total_multiplicity.get_str()},
          {"notes", r.notes}};
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace tropical::io
