#include "tropical/complex.hpp"

#include <algorithm>
#include <set>

#include "tropical/error.hpp"

namespace tropical {

PolyhedralComplex PolyhedralComplex::from_cells(std::size_t ambient_dim, const std::vector<Polyhedron>& cells) {
  std::map<Polyhedron, std::vector<Polyhedron>> faces;
  std::vector<Polyhedron> work;
  for (const auto& c : cells) {
    if (c.ambient_dim() != ambient_dim) throw TropicalError(ErrorKind::DimensionMismatch, "cell of a complex");
    if (c.is_empty() || faces.contains(c)) continue;
    faces.emplace(c, std::vector<Polyhedron>{});
    work.push_back(c);
  }
  while (!work.empty()) {
    Polyhedron p = std::move(work.back());
    work.pop_back();
    std::vector<Polyhedron> fs;
    for (auto& f : p.facets()) {
      if (f.is_empty()) continue;
      if (!faces.contains(f)) {
        faces.emplace(f, std::vector<Polyhedron>{});
        work.push_back(f);
      }
      fs.push_back(std::move(f));
    }
    faces[p] = std::move(fs);
  }

  PolyhedralComplex out(ambient_dim);
  for (const auto& [p, _] : faces) out.cells_.push_back(p);
  std::stable_sort(out.cells_.begin(), out.cells_.end(),
                   [](const Polyhedron& a, const Polyhedron& b) { return a.dim() > b.dim(); });
  for (std::size_t i = 0; i < out.cells_.size(); ++i) out.index_.emplace(out.cells_[i], i);
  out.facets_of_.resize(out.cells_.size());
  for (std::size_t i = 0; i < out.cells_.size(); ++i) {
    for (const auto& f : faces[out.cells_[i]]) out.facets_of_[i].push_back(out.index_.at(f));
    std::sort(out.facets_of_[i].begin(), out.facets_of_[i].end());
  }
  return out;
}

std::vector<std::size_t> PolyhedralComplex::maximal_cells() const {
  std::vector<bool> is_face(cells_.size());
  for (const auto& fs : facets_of_)
    for (std::size_t f : fs) is_face[f] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!is_face[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> PolyhedralComplex::cells_containing(const RationalVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].contains(x)) out.push_back(i);
  return out;
}

bool PolyhedralComplex::support_contains(const RationalVector& x) const {
  for (const auto& c : cells_)
    if (c.contains(x)) return true;
  return false;
}

std::size_t PolyhedralComplex::find(const Polyhedron& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

WeightedComplex WeightedComplex::from_facets(std::size_t ambient_dim, int dim,
                                             const std::vector<std::pair<Polyhedron, Integer>>& facets) {
  std::map<Polyhedron, Integer> mult;
  std::vector<Polyhedron> cells;
  for (const auto& [p, m] : facets) {
    if (p.dim() != dim)
      throw TropicalError(ErrorKind::InvalidArgument,
                          "facet of dimension " + std::to_string(p.dim()) + " in a complex of dimension " + std::to_string(dim));
    auto [it, inserted] = mult.emplace(p, m);
    if (inserted)
      cells.push_back(p);
    else
      it->second += m;
  }
  return from_cells(ambient_dim, dim, cells, mult);
}

WeightedComplex WeightedComplex::from_cells(std::size_t ambient_dim, int dim, const std::vector<Polyhedron>& cells,
                                            const std::map<Polyhedron, Integer>& multiplicities) {
  WeightedComplex out(ambient_dim, dim);
  out.cells_ = PolyhedralComplex::from_cells(ambient_dim, cells);
  for (const auto& [p, m] : multiplicities) {
    std::size_t id = out.cells_.find(p);
    if (id == PolyhedralComplex::npos) throw TropicalError(ErrorKind::InvalidArgument, "multiplicity on a cell not in the complex");
    out.multiplicities_[id] = m;
  }
  return out;
}

WeightedComplex WeightedComplex::whole_space(std::size_t ambient_dim) {
  return from_facets(ambient_dim, static_cast<int>(ambient_dim), {{Polyhedron::universe(ambient_dim), Integer(1)}});
}

std::vector<std::size_t> WeightedComplex::facets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.cells().size(); ++i)
    if (cells_.cell(i).dim() == dim_) out.push_back(i);
  return out;
}

Integer WeightedComplex::multiplicity(std::size_t id) const {
  auto it = multiplicities_.find(id);
  return it == multiplicities_.end() ? Integer(0) : it->second;
}

Integer WeightedComplex::total_multiplicity() const {
  Integer total = 0;
  for (std::size_t id : facets()) total += multiplicity(id);
  return total;
}

bool WeightedComplex::is_fan() const {
  const RationalVector origin(ambient_dim());
  for (const auto& c : cells_.cells())
    if (!c.contains(origin) || recession_cone(c) != c) return false;
  return true;
}

std::string_view violation_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Multiplicity: return "multiplicity";
    case Violation::Kind::Purity: return "purity";
    case Violation::Kind::ComplexCondition: return "complex-condition";
    case Violation::Kind::Balancing: return "balancing";
  }
  return "unknown";
}

std::vector<Violation> validate(const WeightedComplex& c) {
  std::vector<Violation> out;
  const auto& cx = c.cells();
  for (std::size_t id : c.facets())
    if (c.multiplicity(id) < 1)
      out.push_back({Violation::Kind::Multiplicity, id, PolyhedralComplex::npos,
                     "facet multiplicity " + c.multiplicity(id).get_str() + " is not positive"});
  for (const auto& [id, m] : c.multiplicities())
    if (cx.cell(id).dim() != c.dim())
      out.push_back({Violation::Kind::Multiplicity, id, PolyhedralComplex::npos, "multiplicity on a cell that is not a facet"});

  const auto maximal = cx.maximal_cells();
  for (std::size_t id : maximal)
    if (cx.cell(id).dim() != c.dim())
      out.push_back({Violation::Kind::Purity, id, PolyhedralComplex::npos,
                     "maximal cell of dimension " + std::to_string(cx.cell(id).dim())});

  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      const Polyhedron& p = cx.cell(maximal[i]);
      const Polyhedron& q = cx.cell(maximal[j]);
      Polyhedron meet = intersect(p, q);
      if (meet.is_empty()) continue;
      if (!meet.is_face_of(p) || !meet.is_face_of(q))
        out.push_back({Violation::Kind::ComplexCondition, maximal[i], maximal[j],
                       "cells meet in a set that is not a common face"});
    }
  return out;
}

std::vector<Violation> check_balancing(const PolyhedralComplex& cells, int dim,
                                       const std::map<std::size_t, Integer>& weights) {
  std::vector<Violation> out;
  if (dim < 1) return out;
  const std::size_t n = cells.ambient_dim();
  std::map<std::size_t, std::vector<std::size_t>> cofaces;
  for (std::size_t id = 0; id < cells.cells().size(); ++id) {
    if (cells.cell(id).dim() != dim) continue;
    for (std::size_t f : cells.facets_of(id)) cofaces[f].push_back(id);
  }
  for (std::size_t tau = 0; tau < cells.cells().size(); ++tau) {
    const Polyhedron& t = cells.cell(tau);
    if (t.dim() != dim - 1) continue;
    const Sublattice span = affine_span_lattice(t);
    const std::size_t r = span.rank();
    const IntegerMatrix inv = unimodular_inverse(completed_basis(span));
    const RationalVector base = relative_interior_point(t);
    IntegerVector sum(n - r);
    for (std::size_t sigma : cofaces[tau]) {
      auto w = weights.find(sigma);
      if (w == weights.end() || w->second == 0) continue;
      const IntegerVector d = clear_denominators(relative_interior_point(cells.cell(sigma)) - base);
      IntegerVector q(n - r);
      for (std::size_t k = r; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) q[k - r] += d[i] * inv(i, k);
      const IntegerVector v = primitive_vector(q);
      for (std::size_t k = 0; k < q.size(); ++k) sum[k] += w->second * v[k];
    }
    if (!is_zero(sum))
      out.push_back({Violation::Kind::Balancing, tau, PolyhedralComplex::npos,
                     "weighted sum of primitive generators is " + to_string(sum) + " around " +
                         to_string(relative_interior_point(t))});
  }
  return out;
}

std::vector<Violation> check_balancing(const WeightedComplex& c) {
  return check_balancing(c.cells(), c.dim(), c.multiplicities());
}

WeightedFan star(const WeightedComplex& c, const RationalVector& w) {
  const RationalVector x = canonical(w);
  if (x.size() != c.ambient_dim()) throw TropicalError(ErrorKind::DimensionMismatch, "star");
  if (!c.cells().support_contains(x)) throw TropicalError(ErrorKind::NotInSupport, "star: " + to_string(x));
  std::vector<std::pair<Polyhedron, Integer>> cones;
  for (std::size_t id : c.facets())
    if (c.cell(id).contains(x)) cones.emplace_back(c.cell(id).tangent_cone(x), c.multiplicity(id));
  return WeightedComplex::from_facets(c.ambient_dim(), c.dim(), cones);
}

bool is_simple_point(const WeightedComplex& c, const RationalVector& w) {
  for (std::size_t id : c.facets())
    if (c.multiplicity(id) == 1 && c.cell(id).in_relative_interior(w)) return true;
  return false;
}

int codim_at(const PolyhedralComplex& c, const RationalVector& w) {
  int best = -1;
  for (const auto& cell : c.cells())
    if (cell.dim() > best && cell.contains(w)) best = cell.dim();
  if (best < 0) throw TropicalError(ErrorKind::NotInSupport, "codim_at: " + to_string(w));
  return static_cast<int>(c.ambient_dim()) - best;
}

int codim_at(const WeightedComplex& c, const RationalVector& w) { return codim_at(c.cells(), w); }

namespace {

// Necessary condition for p and q to meet: no inequality of p is violated
// by every vertex of q. Only decisive for bounded q.
bool may_meet(const Polyhedron& p, const Polyhedron& q) {
  if (!q.is_bounded()) return true;
  for (const auto& c : p.h().inequalities) {
    bool all_outside = true;
    for (const auto& v : q.vertices())
      if (dot(c.normal, v) <= c.offset) {
        all_outside = false;
        break;
      }
    if (all_outside) return false;
  }
  return true;
}

// Full-dimensional pieces sigma ∩ tau, tau ranging over every cell of b,
// together with the tau they came from. Distinct pieces have disjoint
// relative interiors.
std::map<Polyhedron, std::size_t> pieces_of(const Polyhedron& sigma, const PolyhedralComplex& b) {
  std::map<Polyhedron, std::size_t> out;
  for (std::size_t id = 0; id < b.cells().size(); ++id) {
    const Polyhedron& tau = b.cell(id);
    if (tau.dim() < sigma.dim()) continue;
    if (!may_meet(sigma, tau) || !may_meet(tau, sigma)) continue;
    Polyhedron piece = intersect(sigma, tau);
    if (piece.dim() == sigma.dim()) out.emplace(std::move(piece), id);
  }
  return out;
}

// sigma is covered by its pieces iff every piece facet reaching the relative
// interior of sigma is shared by two pieces.
bool covered(const Polyhedron& sigma, const std::map<Polyhedron, std::size_t>& pieces) {
  if (pieces.empty()) return false;
  if (pieces.size() == 1 && pieces.begin()->first == sigma) return true;
  std::map<Polyhedron, int> count;
  for (const auto& [p, _] : pieces)
    for (auto& f : p.facets()) ++count[std::move(f)];
  for (const auto& [f, k] : count)
    if (k < 2 && sigma.in_relative_interior(relative_interior_point(f))) return false;
  return true;
}

bool support_within(const PolyhedralComplex& a, const PolyhedralComplex& b) {
  for (std::size_t id : a.maximal_cells())
    if (!covered(a.cell(id), pieces_of(a.cell(id), b))) return false;
  return true;
}

}  // namespace

PolyhedralComplex set_intersection(const PolyhedralComplex& a, const PolyhedralComplex& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw TropicalError(ErrorKind::DimensionMismatch, "set_intersection");
  std::vector<Polyhedron> cells;
  const auto ma = a.maximal_cells();
  const auto mb = b.maximal_cells();
  for (std::size_t i : ma)
    for (std::size_t j : mb) {
      const Polyhedron& p = a.cell(i);
      const Polyhedron& q = b.cell(j);
      if (!may_meet(p, q) || !may_meet(q, p)) continue;
      Polyhedron meet = intersect(p, q);
      if (!meet.is_empty()) cells.push_back(std::move(meet));
    }
  return PolyhedralComplex::from_cells(a.ambient_dim(), cells);
}

PolyhedralComplex set_intersection(const WeightedComplex& a, const WeightedComplex& b) {
  return set_intersection(a.cells(), b.cells());
}

bool supports_equal(const WeightedComplex& a, const WeightedComplex& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return support_within(a.cells(), b.cells()) && support_within(b.cells(), a.cells());
}

bool weighted_supports_equal(const WeightedComplex& a, const WeightedComplex& b) {
  if (!supports_equal(a, b)) return false;
  if (a.empty()) return true;
  if (a.dim() != b.dim()) return false;
  for (std::size_t id : a.facets()) {
    const auto pieces = pieces_of(a.cell(id), b.cells());
    for (const auto& [piece, tau] : pieces) {
      // Weight of b at a relative-interior point of the piece.
      const RationalVector x = relative_interior_point(piece);
      Integer mb = 0;
      for (std::size_t f : b.facets())
        if (b.cell(f).in_relative_interior(x)) mb = b.multiplicity(f);
      if (mb != a.multiplicity(id)) return false;
    }
  }
  return true;
}

}  // namespace tropical
