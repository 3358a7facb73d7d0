#include "tropical/intersection.hpp"

#include <algorithm>
#include <set>

#include "tropical/error.hpp"

namespace tropical {

namespace {

unsigned long next_prime(unsigned long p) {
  for (unsigned long q = p + 1;; ++q) {
    bool prime = q >= 2;
    for (unsigned long d = 2; d * d <= q && prime; ++d) prime = q % d != 0;
    if (prime) return q;
  }
}

RationalVector moment_point(unsigned long t, std::size_t n) {
  RationalVector v(n);
  Integer power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = power;
    power *= t;
  }
  return v;
}

class FaceCache {
 public:
  const std::vector<Polyhedron>& operator()(const Polyhedron& p) {
    auto it = faces_.find(p);
    if (it == faces_.end()) it = faces_.emplace(p, all_faces(p)).first;
    return it->second;
  }

 private:
  std::map<Polyhedron, std::vector<Polyhedron>> faces_;
};

// dim of the intersection of F_i + shift_i over i, or -1.
int displaced_dim(const std::vector<const Polyhedron*>& faces, const std::vector<RationalVector>& shifts) {
  Polyhedron meet = faces[0]->translated(shifts[0]);
  for (std::size_t i = 1; i < faces.size() && !meet.is_empty(); ++i) meet = intersect(meet, faces[i]->translated(shifts[i]));
  return meet.dim();
}

// Checks every tuple of faces of the given cone tuples; appends to the
// certificate for pairs. Returns false on the first non-generic tuple.
bool certify(const std::vector<std::vector<Polyhedron>>& tuples, const std::vector<RationalVector>& shifts, std::size_t n,
             FaceCache& faces, std::vector<GenericityCheck>* certificate) {
  const std::size_t r = shifts.size();
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const auto& tuple = tuples[ti];
    std::vector<const std::vector<Polyhedron>*> lists;
    for (const auto& c : tuple) lists.push_back(&faces(c));
    std::vector<std::size_t> idx(r, 0);
    for (;;) {
      std::vector<const Polyhedron*> fs;
      int expected = -static_cast<int>((r - 1) * n);
      for (std::size_t i = 0; i < r; ++i) {
        fs.push_back(&(*lists[i])[idx[i]]);
        expected += fs.back()->dim();
      }
      const int d = displaced_dim(fs, shifts);
      if (d != -1 && d != expected) return false;
      if (certificate && r == 2) certificate->push_back({ti, *fs[0], *fs[1], d});
      std::size_t k = 0;
      while (k < r && ++idx[k] == lists[k]->size()) idx[k++] = 0;
      if (k == r) break;
    }
  }
  return true;
}

// Star cones with multiplicities of the facets of c through p.
std::vector<std::pair<Polyhedron, Integer>> star_cones(const WeightedComplex& c, const RationalVector& p) {
  std::vector<std::pair<Polyhedron, Integer>> out;
  for (std::size_t id : c.facets())
    if (c.cell(id).contains(p)) out.emplace_back(c.cell(id).tangent_cone(p), c.multiplicity(id));
  return out;
}

// Coordinates of a saturated lattice L with basis the first k rows of B:
// x = c B, so c = x B^{-1}.
class LatticeChart {
 public:
  explicit LatticeChart(const Sublattice& l) : k_(l.rank()), n_(l.ambient_dim()), inv_(unimodular_inverse(completed_basis(l))) {}

  std::size_t rank() const { return k_; }

  IntegerVector coords(const IntegerVector& x) const {
    IntegerVector c(n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i) c[j] += x[i] * inv_(i, j);
    for (std::size_t j = k_; j < n_; ++j)
      if (c[j] != 0) throw TropicalError(ErrorKind::InvalidArgument, "complex leaves the ambient facet near the point");
    c.resize(k_);
    return c;
  }

  // A cone with apex 0 inside span(L), rewritten in Z^k.
  Polyhedron cone(const Polyhedron& c) const {
    std::vector<IntegerVector> rays, lin;
    for (const auto& r : c.rays()) rays.push_back(coords(r));
    for (const auto& l : c.lineality().generators()) lin.push_back(coords(l));
    return Polyhedron::cone(k_, rays, lin);
  }

 private:
  std::size_t k_;
  std::size_t n_;
  IntegerMatrix inv_;
};

// Star cones of a and b at a point, in the lattice where displacement happens.
struct LocalSetup {
  std::size_t dim = 0;
  std::vector<std::pair<Polyhedron, Integer>> a, b;
  std::size_t ambient_facet = PolyhedralComplex::npos;
};

std::optional<LocalSetup> local_setup(const WeightedComplex& a, const WeightedComplex& b, const RationalVector& p,
                                      const WeightedComplex* ambient) {
  LocalSetup s;
  s.a = star_cones(a, p);
  s.b = star_cones(b, p);
  s.dim = a.ambient_dim();
  if (!ambient) return s;
  for (std::size_t id : ambient->facets())
    if (ambient->cell(id).in_relative_interior(p)) {
      s.ambient_facet = id;
      break;
    }
  if (s.ambient_facet == PolyhedralComplex::npos) return std::nullopt;
  LatticeChart chart(affine_span_lattice(ambient->cell(s.ambient_facet)));
  s.dim = chart.rank();
  for (auto& [c, m] : s.a) c = chart.cone(c);
  for (auto& [c, m] : s.b) c = chart.cone(c);
  return s;
}

void add_pairs(const LocalSetup& s, std::vector<std::pair<Polyhedron, Polyhedron>>& pairs) {
  for (const auto& [c, m] : s.a)
    for (const auto& [d, mm] : s.b) pairs.emplace_back(c, d);
}

Integer displacement_sum(const LocalSetup& s, const RationalVector& v) {
  Integer total = 0;
  for (const auto& [c, m] : s.a)
    for (const auto& [d, mm] : s.b) {
      if (intersect(c, d.translated(v)).is_empty()) continue;
      LatticeIndex idx = lattice_index(affine_span_lattice(c), affine_span_lattice(d), s.dim);
      if (idx.is_infinite()) continue;
      total += idx.value() * m * mm;
    }
  return total;
}

int expected_dim(const WeightedComplex& a, const WeightedComplex& b, const WeightedComplex* ambient) {
  const int dy = ambient ? ambient->dim() : static_cast<int>(a.ambient_dim());
  return a.dim() + b.dim() - dy;
}

void require_same_ambient(const WeightedComplex& a, const WeightedComplex& b, const WeightedComplex* ambient) {
  if (a.ambient_dim() != b.ambient_dim() || (ambient && ambient->ambient_dim() != a.ambient_dim()))
    throw TropicalError(ErrorKind::DimensionMismatch, "complexes live in different ambient spaces");
}

Integer local_multiplicity_at(const WeightedComplex& a, const WeightedComplex& b, const Polyhedron& tau,
                              const WeightedComplex* ambient) {
  auto setup = local_setup(a, b, relative_interior_point(tau), ambient);
  if (!setup)
    throw TropicalError(ErrorKind::InvalidArgument, "cell is not in the relative interior of an ambient facet");
  std::vector<std::pair<Polyhedron, Polyhedron>> pairs;
  add_pairs(*setup, pairs);
  return displacement_sum(*setup, pick_generic_vector(pairs, setup->dim).v);
}

}  // namespace

DisplacementVector pick_generic_vector(const std::vector<std::pair<Polyhedron, Polyhedron>>& cones, std::size_t n,
                                       std::size_t choice) {
  std::vector<std::vector<Polyhedron>> tuples;
  for (const auto& [c, d] : cones) {
    if (c.ambient_dim() != n || d.ambient_dim() != n) throw TropicalError(ErrorKind::DimensionMismatch, "pick_generic_vector");
    tuples.push_back({c, d});
  }
  FaceCache faces;
  for (unsigned long t = 2;; t = next_prime(t)) {
    DisplacementVector out;
    out.v = moment_point(t, n);
    // c ∩ (d + v)
    if (!certify(tuples, {RationalVector(n), out.v}, n, faces, &out.certificate)) continue;
    if (choice-- == 0) return out;
  }
}

Integer local_intersection_multiplicity(const WeightedComplex& a, const WeightedComplex& b, const Polyhedron& tau,
                                        const WeightedComplex* ambient) {
  require_same_ambient(a, b, ambient);
  const PolyhedralComplex common = set_intersection(a, b);
  if (common.find(tau) == PolyhedralComplex::npos)
    throw TropicalError(ErrorKind::NotACommonCell, "cell is not in the common refinement");
  const int e = expected_dim(a, b, ambient);
  if (tau.dim() != e)
    throw TropicalError(ErrorKind::NotProper,
                        "cell has dimension " + std::to_string(tau.dim()) + ", expected " + std::to_string(e));
  return local_multiplicity_at(a, b, tau, ambient);
}

WeightedComplex stable_intersection(const WeightedComplex& a, const WeightedComplex& b, const StableOptions& options) {
  require_same_ambient(a, b, options.ambient);
  const std::size_t n = a.ambient_dim();
  const int e = expected_dim(a, b, options.ambient);
  if (a.empty() || b.empty() || e < 0) return WeightedComplex(n, std::max(e, -1));

  const PolyhedralComplex common = set_intersection(a, b);
  // Cells grouped by the ambient facet they lie in; one displacement vector per group.
  std::map<std::size_t, std::vector<std::pair<std::size_t, LocalSetup>>> groups;
  for (std::size_t id = 0; id < common.cells().size(); ++id) {
    if (common.cell(id).dim() != e) continue;
    auto setup = local_setup(a, b, relative_interior_point(common.cell(id)), options.ambient);
    if (!setup) continue;
    const std::size_t key = setup->ambient_facet;
    groups[key].emplace_back(id, std::move(*setup));
  }
  std::vector<std::pair<Polyhedron, Integer>> facets;
  for (const auto& [key, cells] : groups) {
    std::vector<std::pair<Polyhedron, Polyhedron>> pairs;
    for (const auto& [id, s] : cells) add_pairs(s, pairs);
    const RationalVector v = pick_generic_vector(pairs, cells.front().second.dim, options.displacement_choice).v;
    for (const auto& [id, s] : cells) {
      Integer m = displacement_sum(s, v);
      if (m > 0) facets.emplace_back(common.cell(id), m);
    }
  }
  return WeightedComplex::from_facets(n, e, facets);
}

WeightedComplex stable_intersection_multi(const std::vector<WeightedComplex>& complexes, std::size_t displacement_choice) {
  if (complexes.size() < 2) throw TropicalError(ErrorKind::InvalidArgument, "need at least two complexes");
  const std::size_t n = complexes[0].ambient_dim();
  const std::size_t r = complexes.size();
  int e = static_cast<int>(n);
  bool any_empty = false;
  for (const auto& c : complexes) {
    if (c.ambient_dim() != n) throw TropicalError(ErrorKind::DimensionMismatch, "stable_intersection_multi");
    e -= static_cast<int>(n) - c.dim();
    any_empty = any_empty || c.empty();
  }
  if (any_empty || e < 0) return WeightedComplex(n, std::max(e, -1));

  PolyhedralComplex common = complexes[0].cells();
  for (std::size_t i = 1; i < r; ++i) common = set_intersection(common, complexes[i].cells());

  // Product of the stars meets the displaced diagonal: ∩ (C_i - v_i) ≠ ∅.
  struct Tuple {
    std::size_t cell;
    std::vector<Polyhedron> cones;
    Integer weight;
  };
  std::vector<Tuple> tuples;
  for (std::size_t id = 0; id < common.cells().size(); ++id) {
    if (common.cell(id).dim() != e) continue;
    const RationalVector p = relative_interior_point(common.cell(id));
    std::vector<std::vector<std::pair<Polyhedron, Integer>>> stars;
    for (const auto& c : complexes) stars.push_back(star_cones(c, p));
    std::vector<std::size_t> idx(r, 0);
    if (std::any_of(stars.begin(), stars.end(), [](const auto& s) { return s.empty(); })) continue;
    for (;;) {
      Tuple t{id, {}, 1};
      for (std::size_t i = 0; i < r; ++i) {
        t.cones.push_back(stars[i][idx[i]].first);
        t.weight *= stars[i][idx[i]].second;
      }
      tuples.push_back(std::move(t));
      std::size_t k = 0;
      while (k < r && ++idx[k] == stars[k].size()) idx[k++] = 0;
      if (k == r) break;
    }
  }

  std::vector<std::vector<Polyhedron>> cone_tuples;
  for (const auto& t : tuples) cone_tuples.push_back(t.cones);
  FaceCache faces;
  std::vector<RationalVector> shifts;
  for (unsigned long t = 2;; t = next_prime(t)) {
    const RationalVector big = moment_point(t, r * n);
    shifts.clear();
    for (std::size_t i = 0; i < r; ++i) {
      RationalVector s(big.begin() + static_cast<std::ptrdiff_t>(i * n), big.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
      shifts.push_back(Rational(-1) * s);
    }
    if (!certify(cone_tuples, shifts, n, faces, nullptr)) continue;
    if (displacement_choice-- == 0) break;
  }

  // Diagonal lattice in Z^(rn).
  std::vector<IntegerVector> diagonal;
  for (std::size_t j = 0; j < n; ++j) {
    IntegerVector d(r * n);
    for (std::size_t i = 0; i < r; ++i) d[i * n + j] = 1;
    diagonal.push_back(std::move(d));
  }
  const Sublattice diag(diagonal, r * n);

  std::map<std::size_t, Integer> mult;
  for (const auto& t : tuples) {
    Polyhedron meet = t.cones[0].translated(shifts[0]);
    for (std::size_t i = 1; i < r && !meet.is_empty(); ++i) meet = intersect(meet, t.cones[i].translated(shifts[i]));
    if (meet.is_empty()) continue;
    std::vector<IntegerVector> gens;
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& g : affine_span_lattice(t.cones[i]).generators()) {
        IntegerVector x(r * n);
        for (std::size_t j = 0; j < n; ++j) x[i * n + j] = g[j];
        gens.push_back(std::move(x));
      }
    LatticeIndex idx = lattice_index(Sublattice(gens, r * n), diag, r * n);
    if (idx.is_infinite()) continue;
    mult[t.cell] += idx.value() * t.weight;
  }
  std::vector<std::pair<Polyhedron, Integer>> facets;
  for (const auto& [id, m] : mult)
    if (m > 0) facets.emplace_back(common.cell(id), m);
  return WeightedComplex::from_facets(n, e, facets);
}

MinkowskiWeight MinkowskiWeight::from_cones(const PolyhedralComplex& fan, int codim,
                                            const std::vector<std::pair<Polyhedron, Integer>>& weights) {
  MinkowskiWeight out;
  out.fan = fan;
  out.codim = codim;
  const int d = static_cast<int>(fan.ambient_dim()) - codim;
  for (const auto& [cone, w] : weights) {
    const std::size_t id = fan.find(cone);
    if (id == PolyhedralComplex::npos || cone.dim() != d)
      throw TropicalError(ErrorKind::IncompatibleFans, "weight on a cone that is not a codimension-" + std::to_string(codim) + " cone of the fan");
    out.weights[id] += w;
  }
  return out;
}

Integer MinkowskiWeight::weight(const Polyhedron& cone) const {
  const std::size_t id = fan.find(cone);
  if (id == PolyhedralComplex::npos) return 0;
  auto it = weights.find(id);
  return it == weights.end() ? Integer(0) : it->second;
}

void check_complete_simplicial_fan(const PolyhedralComplex& fan) {
  const std::size_t n = fan.ambient_dim();
  const RationalVector origin(n);
  if (fan.empty()) throw TropicalError(ErrorKind::IncompatibleFans, "empty fan");
  for (const auto& c : fan.cells()) {
    if (!c.contains(origin) || c.vertices().size() != 1 || !is_zero(c.vertices()[0]))
      throw TropicalError(ErrorKind::IncompatibleFans, "cell is not a cone with apex at the origin");
    if (c.lineality().rank() != 0 || static_cast<int>(c.rays().size()) != c.dim())
      throw TropicalError(ErrorKind::IncompatibleFans, "cone is not simplicial");
  }
  for (std::size_t id : fan.maximal_cells())
    if (fan.cell(id).dim() != static_cast<int>(n)) throw TropicalError(ErrorKind::IncompatibleFans, "fan is not complete");
  std::map<std::size_t, int> cofaces;
  for (std::size_t id = 0; id < fan.cells().size(); ++id)
    if (fan.cell(id).dim() == static_cast<int>(n))
      for (std::size_t f : fan.facets_of(id)) ++cofaces[f];
  for (std::size_t id = 0; id < fan.cells().size(); ++id)
    if (fan.cell(id).dim() == static_cast<int>(n) - 1 && cofaces[id] != 2)
      throw TropicalError(ErrorKind::IncompatibleFans, "fan is not complete");
}

std::vector<Violation> check_balancing(const MinkowskiWeight& c) {
  return check_balancing(c.fan, static_cast<int>(c.fan.ambient_dim()) - c.codim, c.weights);
}

MinkowskiWeight minkowski_product(const MinkowskiWeight& c, const MinkowskiWeight& d, std::size_t displacement_choice) {
  if (c.fan.ambient_dim() != d.fan.ambient_dim() || c.fan.cells() != d.fan.cells())
    throw TropicalError(ErrorKind::IncompatibleFans, "weights live on different fans");
  check_complete_simplicial_fan(c.fan);
  const PolyhedralComplex& fan = c.fan;
  const int n = static_cast<int>(fan.ambient_dim());
  const int codim = c.codim + d.codim;
  if (c.codim < 0 || d.codim < 0 || codim > n) throw TropicalError(ErrorKind::InvalidArgument, "codimensions exceed the dimension");

  std::vector<std::size_t> cs, ds;
  for (std::size_t id = 0; id < fan.cells().size(); ++id) {
    if (fan.cell(id).dim() == n - c.codim) cs.push_back(id);
    if (fan.cell(id).dim() == n - d.codim) ds.push_back(id);
  }
  std::vector<std::pair<Polyhedron, Polyhedron>> pairs;
  for (std::size_t i : cs)
    for (std::size_t j : ds) pairs.emplace_back(fan.cell(i), fan.cell(j));
  const RationalVector v = pick_generic_vector(pairs, fan.ambient_dim(), displacement_choice).v;

  MinkowskiWeight out;
  out.fan = fan;
  out.codim = codim;
  for (std::size_t tau = 0; tau < fan.cells().size(); ++tau) {
    const Polyhedron& t = fan.cell(tau);
    if (t.dim() != n - codim) continue;
    Integer total = 0;
    for (std::size_t i : cs) {
      const Integer wc = c.weights.contains(i) ? c.weights.at(i) : Integer(0);
      if (wc == 0 || !fan.cell(i).contains(t)) continue;
      for (std::size_t j : ds) {
        const Integer wd = d.weights.contains(j) ? d.weights.at(j) : Integer(0);
        if (wd == 0 || !fan.cell(j).contains(t)) continue;
        if (intersect(fan.cell(i), fan.cell(j).translated(v)).is_empty()) continue;
        LatticeIndex idx = lattice_index(affine_span_lattice(fan.cell(i)), affine_span_lattice(fan.cell(j)), fan.ambient_dim());
        if (!idx.is_infinite()) total += idx.value() * wc * wd;
      }
    }
    if (total != 0) out.weights[tau] = total;
  }
  return out;
}

Rational mixed_volume(const std::vector<Polyhedron>& polytopes) {
  const std::size_t n = polytopes.size();
  if (n == 0) throw TropicalError(ErrorKind::InvalidArgument, "mixed volume of no polytopes");
  for (const auto& p : polytopes) {
    if (p.ambient_dim() != n)
      throw TropicalError(ErrorKind::InvalidArgument, "need exactly as many polytopes as the ambient dimension");
    if (p.is_empty()) throw TropicalError(ErrorKind::EmptyPolyhedron, "mixed volume of an empty polytope");
    if (!p.is_bounded()) throw TropicalError(ErrorKind::Unbounded, "mixed volume of an unbounded polyhedron");
  }
  Rational total = 0;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    Polyhedron sum = Polyhedron::point(RationalVector(n));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) {
        sum = minkowski_sum(sum, polytopes[i]);
        ++k;
      }
    const Rational vol = euclidean_volume(sum);
    if ((n - k) % 2 == 0)
      total += vol;
    else
      total -= vol;
  }
  total.canonicalize();
  return total;
}

Integer complete_intersection_count(const std::vector<ValuedLaurentPoly>& polys, const RationalVector& w) {
  const std::size_t n = w.size();
  if (polys.size() != n) throw TropicalError(ErrorKind::InvalidArgument, "need exactly as many polynomials as the ambient dimension");
  std::vector<WeightedComplex> trops;
  for (const auto& f : polys) {
    if (f.ambient_dim() != n) throw TropicalError(ErrorKind::DimensionMismatch, "complete_intersection_count");
    trops.push_back(tropicalize(f));
    if (!trops.back().cells().support_contains(w))
      throw TropicalError(ErrorKind::NotIsolated, to_string(w) + " is not in every tropical hypersurface");
  }
  PolyhedralComplex common = trops[0].cells();
  for (std::size_t i = 1; i < n; ++i) common = set_intersection(common, trops[i].cells());
  if (codim_at(common, w) != static_cast<int>(n))
    throw TropicalError(ErrorKind::NotIsolated, to_string(w) + " is not an isolated intersection point");
  std::vector<Polyhedron> cells;
  for (const auto& f : polys) cells.push_back(dual_cell(f, w));
  const Rational mv = mixed_volume(cells);
  return mv.get_num() / mv.get_den();
}

namespace {

void require_in_supports(const WeightedComplex& a, const WeightedComplex& b, const RationalVector& w,
                         const WeightedComplex* ambient) {
  if (w.size() != a.ambient_dim()) throw TropicalError(ErrorKind::DimensionMismatch, "point has the wrong length");
  if (!a.cells().support_contains(w) || !b.cells().support_contains(w) || (ambient && !ambient->cells().support_contains(w)))
    throw TropicalError(ErrorKind::NotInSupport, to_string(w) + " is not in every support");
}

// Cells of the common refinement through w that are not faces of other such cells.
std::vector<std::size_t> maximal_cells_at(const PolyhedralComplex& common, const RationalVector& w) {
  const auto through = common.cells_containing(w);
  std::set<std::size_t> faces;
  for (std::size_t id : through)
    for (std::size_t f : common.facets_of(id)) faces.insert(f);
  std::vector<std::size_t> out;
  for (std::size_t id : through)
    if (!faces.contains(id)) out.push_back(id);
  return out;
}

bool proper_at(const PolyhedralComplex& common, const RationalVector& w, int e, std::string* why) {
  for (std::size_t id : maximal_cells_at(common, w))
    if (common.cell(id).dim() != e) {
      if (why)
        *why = "the intersection has a cell of dimension " + std::to_string(common.cell(id).dim()) + " at the point, expected " +
               std::to_string(e);
      return false;
    }
  return true;
}

}  // namespace

bool check_proper(const WeightedComplex& a, const WeightedComplex& b, const RationalVector& w,
                  const WeightedComplex* ambient) {
  require_same_ambient(a, b, ambient);
  const RationalVector x = canonical(w);
  require_in_supports(a, b, x, ambient);
  return proper_at(set_intersection(a, b), x, expected_dim(a, b, ambient), nullptr);
}

std::string_view verdict_name(LiftReport::Verdict v) { return v == LiftReport::Verdict::Lifts ? "LIFTS" : "NO_GUARANTEE"; }

LiftReport lifting_report(const WeightedComplex& a, const WeightedComplex& b, const RationalVector& w,
                          const WeightedComplex* ambient) {
  require_same_ambient(a, b, ambient);
  LiftReport report;
  report.point = canonical(w);
  require_in_supports(a, b, report.point, ambient);
  const PolyhedralComplex common = set_intersection(a, b);
  const int e = expected_dim(a, b, ambient);
  std::string why;
  report.proper = proper_at(common, report.point, e, &why);
  report.simple_ambient = !ambient || is_simple_point(*ambient, report.point);
  report.verdict = report.proper && report.simple_ambient ? LiftReport::Verdict::Lifts : LiftReport::Verdict::NoGuarantee;

  std::vector<std::string> notes;
  if (!report.proper) notes.push_back("not proper: " + why);
  if (!report.simple_ambient) notes.push_back("not a simple point of the ambient tropicalization");
  if (report.proper) {
    bool in_ambient_facet = !ambient;
    if (ambient)
      for (std::size_t id : ambient->facets()) in_ambient_facet = in_ambient_facet || ambient->cell(id).in_relative_interior(report.point);
    if (!in_ambient_facet) {
      notes.push_back("point is not in the relative interior of an ambient facet; no multiplicity");
    } else {
      std::optional<Integer> least;
      for (std::size_t id : common.cells_containing(report.point)) {
        if (common.cell(id).dim() != e) continue;
        Integer m = local_multiplicity_at(a, b, common.cell(id), ambient);
        if (!least || m < *least) least = m;
      }
      report.total_multiplicity = least.value_or(0);
      notes.push_back("tropical intersection multiplicity " + report.total_multiplicity.get_str() +
                      " bounds the intersection multiplicity from below");
    }
  }
  for (std::size_t i = 0; i < notes.size(); ++i) report.notes += (i ? "; " : "") + notes[i];
  return report;
}

}  // namespace tropical
