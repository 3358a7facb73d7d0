#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropical/complex.hpp"
#include "tropical/intersection.hpp"
#include "tropical/valued_poly.hpp"

namespace tropical::io {

using Json = nlohmann::ordered_json;

// Malformed input. The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"n": 2, "terms": [{"exp": [1, 0], "val": "0", "tag": "a"}, ...]}
Json to_json(const ValuedLaurentPoly& f);
ValuedLaurentPoly poly_from_json(const Json& j);

// {"ineqs": [{"normal": [..], "offset": "p/q"}], "eqs": [...]}
Json to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const Json& j, std::size_t n);

// {"n": 2, "dim": 1, "cells": [...], "multiplicities": [{"cell": 0, "m": 1}]}
// Only facets are written; faces are recomputed on load.
Json to_json(const WeightedComplex& c);
WeightedComplex complex_from_json(const Json& j);
// Maximal cells of an unweighted complex, "dim" is the largest cell dimension.
Json to_json(const PolyhedralComplex& c);

// {"n": 2, "polytopes": [{"vertices": [["0", "0"], ...]}, ...]}
std::vector<Polyhedron> polytopes_from_json(const Json& j);

Json to_json(const std::vector<Violation>& violations);
Json to_json(const LiftReport& r);

// Integer JSON values or rational strings.
Rational rational_from_json(const Json& j);
// "w1,w2,..." with rational entries.
RationalVector parse_point(const std::string& text);

Json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace tropical::io
