#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tropical/complex.hpp"

namespace tropical {

// A Laurent polynomial over a valued field, seen through the valuations of
// its coefficients. Tags are opaque labels for the residues.
class ValuedLaurentPoly {
 public:
  struct Term {
    IntegerVector exponent;
    Rational valuation;
    std::string tag;
  };

  ValuedLaurentPoly() = default;
  explicit ValuedLaurentPoly(std::size_t n) : n_(n) {}
  // Throws InvalidArgument on a repeated exponent or a wrong length.
  ValuedLaurentPoly(std::size_t n, const std::vector<Term>& terms);

  void add_term(IntegerVector exponent, Rational valuation, std::string tag = {});

  std::size_t ambient_dim() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  // Sorted by exponent.
  std::vector<Term> terms() const;
  std::vector<IntegerVector> exponents() const;
  bool has_term(const IntegerVector& u) const { return terms_.contains(u); }
  // Throws NotATerm.
  const Rational& valuation(const IntegerVector& u) const;
  const std::string& tag(const IntegerVector& u) const;

 private:
  std::size_t n_ = 0;
  std::map<IntegerVector, std::pair<Rational, std::string>> terms_;
};

// nu(a_u) + <u, w>. Throws NotATerm.
Rational w_weight(const ValuedLaurentPoly& f, const IntegerVector& u, const RationalVector& w);
// Exponents of minimal w-weight, sorted.
std::vector<IntegerVector> initial_support(const ValuedLaurentPoly& f, const RationalVector& w);
// The terms of minimal w-weight, all with valuation 0.
ValuedLaurentPoly initial_form(const ValuedLaurentPoly& f, const RationalVector& w);
// conv(initial_support(f, w)).
Polyhedron dual_cell(const ValuedLaurentPoly& f, const RationalVector& w);
Polyhedron newton_polytope(const ValuedLaurentPoly& f);

struct NewtonSubdivision {
  Polyhedron polytope;
  // Projected lower faces of maximal dimension.
  std::vector<Polyhedron> cells;
  std::map<IntegerVector, Rational> lift;
};

NewtonSubdivision newton_subdivision(const ValuedLaurentPoly& f);

// The corner locus of f with dual-edge lattice lengths as multiplicities.
// Throws MonomialInput for fewer than two terms.
WeightedComplex tropicalize(const ValuedLaurentPoly& f);

}  // namespace tropical
