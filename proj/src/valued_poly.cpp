#include "tropical/valued_poly.hpp"

#include <set>

#include "tropical/error.hpp"

namespace tropical {

ValuedLaurentPoly::ValuedLaurentPoly(std::size_t n, const std::vector<Term>& terms) : n_(n) {
  for (const auto& t : terms) add_term(t.exponent, t.valuation, t.tag);
}

void ValuedLaurentPoly::add_term(IntegerVector exponent, Rational valuation, std::string tag) {
  if (exponent.size() != n_)
    throw TropicalError(ErrorKind::InvalidArgument, "exponent " + to_string(exponent) + " has the wrong length");
  valuation.canonicalize();
  auto [it, inserted] = terms_.emplace(std::move(exponent), std::make_pair(std::move(valuation), std::move(tag)));
  if (!inserted) throw TropicalError(ErrorKind::InvalidArgument, "repeated exponent " + to_string(it->first));
}

std::vector<ValuedLaurentPoly::Term> ValuedLaurentPoly::terms() const {
  std::vector<Term> out;
  for (const auto& [u, vt] : terms_) out.push_back({u, vt.first, vt.second});
  return out;
}

std::vector<IntegerVector> ValuedLaurentPoly::exponents() const {
  std::vector<IntegerVector> out;
  for (const auto& [u, _] : terms_) out.push_back(u);
  return out;
}

const Rational& ValuedLaurentPoly::valuation(const IntegerVector& u) const {
  auto it = terms_.find(u);
  if (it == terms_.end()) throw TropicalError(ErrorKind::NotATerm, to_string(u));
  return it->second.first;
}

const std::string& ValuedLaurentPoly::tag(const IntegerVector& u) const {
  auto it = terms_.find(u);
  if (it == terms_.end()) throw TropicalError(ErrorKind::NotATerm, to_string(u));
  return it->second.second;
}

Rational w_weight(const ValuedLaurentPoly& f, const IntegerVector& u, const RationalVector& w) {
  if (w.size() != f.ambient_dim()) throw TropicalError(ErrorKind::DimensionMismatch, "w_weight");
  Rational r = f.valuation(u) + dot(u, canonical(w));
  r.canonicalize();
  return r;
}

std::vector<IntegerVector> initial_support(const ValuedLaurentPoly& f, const RationalVector& w) {
  std::vector<IntegerVector> out;
  Rational best;
  for (const auto& u : f.exponents()) {
    Rational x = w_weight(f, u, w);
    if (out.empty() || x < best) {
      out.assign(1, u);
      best = x;
    } else if (x == best) {
      out.push_back(u);
    }
  }
  return out;
}

ValuedLaurentPoly initial_form(const ValuedLaurentPoly& f, const RationalVector& w) {
  ValuedLaurentPoly g(f.ambient_dim());
  for (auto& u : initial_support(f, w)) g.add_term(u, 0, f.tag(u));
  return g;
}

namespace {

Polyhedron hull(std::size_t n, const std::vector<IntegerVector>& pts) {
  std::vector<RationalVector> rs;
  for (const auto& p : pts) rs.push_back(to_rational(p));
  return Polyhedron::from_generators(n, rs);
}

// { w : the term u has minimal w-weight }.
Polyhedron region(const ValuedLaurentPoly& f, const IntegerVector& u) {
  HPolyhedron h;
  h.ambient_dim = f.ambient_dim();
  const Rational& nu = f.valuation(u);
  for (const auto& t : f.terms()) {
    if (t.exponent == u) continue;
    IntegerVector normal(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) normal[i] = u[i] - t.exponent[i];
    h.inequalities.push_back({std::move(normal), t.valuation - nu});
  }
  return Polyhedron::from_h(h);
}

}  // namespace

Polyhedron dual_cell(const ValuedLaurentPoly& f, const RationalVector& w) {
  return hull(f.ambient_dim(), initial_support(f, w));
}

Polyhedron newton_polytope(const ValuedLaurentPoly& f) {
  if (f.size() == 0) return Polyhedron::empty(f.ambient_dim());
  return hull(f.ambient_dim(), f.exponents());
}

NewtonSubdivision newton_subdivision(const ValuedLaurentPoly& f) {
  const std::size_t n = f.ambient_dim();
  if (f.size() == 0) throw TropicalError(ErrorKind::InvalidArgument, "newton_subdivision of the zero polynomial");
  NewtonSubdivision out;
  out.polytope = newton_polytope(f);
  std::vector<RationalVector> lifted;
  for (const auto& t : f.terms()) {
    RationalVector p = to_rational(t.exponent);
    p.push_back(t.valuation);
    lifted.push_back(std::move(p));
    out.lift.emplace(t.exponent, t.valuation);
  }
  IntegerVector up(n + 1);
  up[n] = 1;
  const Polyhedron upper = Polyhedron::from_generators(n + 1, lifted, {up});
  std::set<Polyhedron> cells;
  for (const auto& face : all_faces(upper)) {
    if (!face.is_bounded() || face.dim() != out.polytope.dim()) continue;
    std::vector<RationalVector> pts;
    for (const auto& v : face.vertices()) pts.emplace_back(v.begin(), v.end() - 1);
    cells.insert(Polyhedron::from_generators(n, pts));
  }
  out.cells.assign(cells.begin(), cells.end());
  return out;
}

WeightedComplex tropicalize(const ValuedLaurentPoly& f) {
  const std::size_t n = f.ambient_dim();
  if (f.size() < 2) throw TropicalError(ErrorKind::MonomialInput, "a monomial has empty tropicalization");
  std::set<Polyhedron> walls;
  for (const auto& u : f.exponents()) {
    const Polyhedron r = region(f, u);
    if (r.dim() != static_cast<int>(n)) continue;
    for (auto& wall : r.facets()) walls.insert(std::move(wall));
  }
  std::vector<std::pair<Polyhedron, Integer>> facets;
  for (const auto& wall : walls) {
    const Polyhedron edge = dual_cell(f, relative_interior_point(wall));
    const RationalVector d = edge.vertices().back() - edge.vertices().front();
    IntegerVector length(n);
    for (std::size_t i = 0; i < n; ++i) length[i] = d[i].get_num();
    facets.emplace_back(wall, content(length));
  }
  return WeightedComplex::from_facets(n, static_cast<int>(n) - 1, facets);
}

}  // namespace tropical
