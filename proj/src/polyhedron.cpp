#include "tropical/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "tropical/error.hpp"

namespace tropical {

namespace {

void make_primitive(IntegerVector& v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& c : v) c /= g;
}

void check_dimension(std::size_t n) {
  if (n > kMaxAmbientDim)
    throw TropicalError(ErrorKind::UnsupportedDimension,
                        "ambient dimension " + std::to_string(n) + " exceeds " + std::to_string(kMaxAmbientDim));
}

// Integer row (q*a, -p) for the constraint a.x <= p/q.
IntegerVector homogenize(const Constraint& c) {
  const Integer& q = c.offset.get_den();
  IntegerVector row(c.normal.size() + 1);
  for (std::size_t i = 0; i < c.normal.size(); ++i) row[i] = c.normal[i] * q;
  row.back() = -c.offset.get_num();
  return row;
}

// Solves a small square rational system exactly. The matrix must be invertible.
RationalVector solve(std::vector<RationalVector> a, RationalVector b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Orthogonal projection onto the complement of span(basis).
class ComplementProjector {
 public:
  explicit ComplementProjector(const Sublattice& lineality) : basis_(lineality.generators()) {
    const std::size_t k = basis_.size();
    gram_.assign(k, RationalVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) gram_[i][j] = dot(basis_[i], basis_[j]);
  }

  RationalVector operator()(const RationalVector& x) const {
    if (basis_.empty()) return x;
    RationalVector rhs(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) rhs[i] = dot(basis_[i], x);
    RationalVector y = solve(gram_, rhs);
    RationalVector out = x;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < out.size(); ++j) out[j] -= y[i] * basis_[i][j];
    return out;
  }

 private:
  std::vector<IntegerVector> basis_;
  std::vector<RationalVector> gram_;
};

VPolyhedron canonical_v(std::size_t n, const std::vector<RationalVector>& points, const std::vector<IntegerVector>& rays,
                        const std::vector<IntegerVector>& lineality) {
  VPolyhedron v;
  v.ambient_dim = n;
  v.lineality = saturate(Sublattice(lineality, n), n);
  ComplementProjector project(v.lineality);
  std::set<RationalVector> pts;
  for (const auto& p : points) pts.insert(project(p));
  std::set<IntegerVector> rs;
  for (const auto& r : rays) {
    IntegerVector pr = clear_denominators(project(to_rational(r)));
    if (!is_zero(pr)) rs.insert(std::move(pr));
  }
  v.vertices.assign(pts.begin(), pts.end());
  v.rays.assign(rs.begin(), rs.end());
  v.empty = v.vertices.empty();
  return v;
}

HPolyhedron empty_h(std::size_t n) {
  HPolyhedron h;
  h.ambient_dim = n;
  h.inequalities.push_back({IntegerVector(n), Rational(-1)});
  return h;
}

}  // namespace

ConeGenerators cone_generators(std::size_t dim, const std::vector<IntegerVector>& inequalities,
                               const std::vector<IntegerVector>& equations) {
  struct Ray {
    IntegerVector v;
    std::vector<bool> tight;
  };
  std::vector<IntegerVector> lin = IntegerMatrix::identity(dim).row_vectors();
  std::vector<Ray> rays;
  std::vector<IntegerVector> processed;

  auto process = [&](const IntegerVector& a, bool equality) {
    if (a.size() != dim) throw TropicalError(ErrorKind::DimensionMismatch, "constraint length");
    if (is_zero(a)) return;
    const std::size_t idx = processed.size();
    const std::size_t rank_before = dim - lin.size();

    std::size_t k = 0;
    while (k < lin.size() && dot(a, lin[k]) == 0) ++k;
    if (k < lin.size()) {
      IntegerVector l0 = lin[k];
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(k));
      Integer c0 = dot(a, l0);
      for (auto& l : lin) {
        Integer cl = dot(a, l);
        if (cl == 0) continue;
        for (std::size_t i = 0; i < dim; ++i) l[i] = c0 * l[i] - cl * l0[i];
        make_primitive(l);
      }
      Integer abs_c0 = abs(c0);
      int s0 = sgn(c0);
      for (auto& r : rays) {
        Integer cr = dot(a, r.v);
        if (cr != 0) {
          for (std::size_t i = 0; i < dim; ++i) r.v[i] = abs_c0 * r.v[i] - s0 * cr * l0[i];
          make_primitive(r.v);
        }
        r.tight.push_back(true);
      }
      if (!equality) {
        Ray nr;
        nr.v = l0;
        if (c0 > 0)
          for (auto& x : nr.v) x = -x;
        make_primitive(nr.v);
        nr.tight.assign(idx, true);
        nr.tight.push_back(false);
        rays.push_back(std::move(nr));
      }
      processed.push_back(a);
      return;
    }

    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(a, rays[i].v);
      if (s[i] > 0) {
        pos.push_back(i);
      } else if (s[i] < 0) {
        neg.push_back(i);
        if (!equality) {
          Ray r = rays[i];
          r.tight.push_back(false);
          next.push_back(std::move(r));
        }
      } else {
        Ray r = rays[i];
        r.tight.push_back(true);
        next.push_back(std::move(r));
      }
    }
    // Two extreme rays are adjacent iff their common tight rows have rank rank_before - 2.
    const std::size_t need = rank_before >= 2 ? rank_before - 2 : 0;
    for (std::size_t pi : pos)
      for (std::size_t ni : neg) {
        const Ray& p = rays[pi];
        const Ray& q = rays[ni];
        std::vector<IntegerVector> common;
        for (std::size_t c = 0; c < idx; ++c)
          if (p.tight[c] && q.tight[c]) common.push_back(processed[c]);
        if (common.size() < need) continue;
        if (rank(common, dim) != need) continue;
        Ray nr;
        nr.v.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) nr.v[i] = s[pi] * q.v[i] - s[ni] * p.v[i];
        make_primitive(nr.v);
        nr.tight.resize(idx + 1);
        for (std::size_t c = 0; c < idx; ++c) nr.tight[c] = p.tight[c] && q.tight[c];
        nr.tight[idx] = true;
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
    processed.push_back(a);
  };

  for (const auto& e : equations) process(e, true);
  for (const auto& a : inequalities) process(a, false);

  ConeGenerators out;
  std::set<IntegerVector> seen;
  for (auto& r : rays)
    if (seen.insert(r.v).second) out.rays.push_back(std::move(r.v));
  out.lineality = std::move(lin);
  return out;
}

VPolyhedron dualize(const HPolyhedron& h) {
  const std::size_t n = h.ambient_dim;
  check_dimension(n);
  std::vector<IntegerVector> ineqs, eqs;
  IntegerVector t_nonneg(n + 1);
  t_nonneg[n] = -1;
  ineqs.push_back(t_nonneg);
  for (const auto& c : h.inequalities) {
    if (c.normal.size() != n) throw TropicalError(ErrorKind::DimensionMismatch, "inequality length");
    ineqs.push_back(homogenize(c));
  }
  for (const auto& c : h.equations) {
    if (c.normal.size() != n) throw TropicalError(ErrorKind::DimensionMismatch, "equation length");
    eqs.push_back(homogenize(c));
  }
  ConeGenerators g = cone_generators(n + 1, ineqs, eqs);

  std::vector<RationalVector> points;
  std::vector<IntegerVector> rays, lin;
  for (const auto& l : g.lineality) lin.emplace_back(l.begin(), l.end() - 1);
  for (const auto& r : g.rays) {
    if (r[n] > 0) {
      RationalVector p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = Rational(r[i], r[n]);
      for (auto& x : p) x.canonicalize();
      points.push_back(std::move(p));
    } else {
      rays.emplace_back(r.begin(), r.end() - 1);
    }
  }
  if (points.empty()) {
    VPolyhedron v;
    v.ambient_dim = n;
    v.empty = true;
    v.lineality = Sublattice(n);
    return v;
  }
  return canonical_v(n, points, rays, lin);
}

HPolyhedron dualize(const VPolyhedron& v) {
  const std::size_t n = v.ambient_dim;
  check_dimension(n);
  if (v.empty || v.vertices.empty()) return empty_h(n);
  std::vector<IntegerVector> gens, lin;
  std::vector<IntegerVector> point_rows;
  for (const auto& p : v.vertices) {
    if (p.size() != n) throw TropicalError(ErrorKind::DimensionMismatch, "vertex length");
    RationalVector hp = p;
    hp.push_back(Rational(1));
    point_rows.push_back(clear_denominators(hp));
    gens.push_back(point_rows.back());
  }
  for (const auto& r : v.rays) {
    if (r.size() != n) throw TropicalError(ErrorKind::DimensionMismatch, "ray length");
    IntegerVector hr = r;
    hr.push_back(0);
    gens.push_back(std::move(hr));
  }
  for (const auto& l : v.lineality.generators()) {
    IntegerVector hl = l;
    hl.push_back(0);
    lin.push_back(std::move(hl));
  }
  ConeGenerators dual = cone_generators(n + 1, gens, lin);

  HPolyhedron h;
  h.ambient_dim = n;
  if (!dual.lineality.empty()) {
    IntegerMatrix eq = hermite_normal_form(IntegerMatrix::from_rows(dual.lineality, n + 1)).h;
    for (std::size_t r = 0; r < eq.rows(); ++r) {
      IntegerVector row = eq.row(r);
      if (is_zero(row)) continue;
      IntegerVector a(row.begin(), row.end() - 1);
      h.equations.push_back({std::move(a), Rational(-row[n])});
    }
  }
  std::set<Constraint> ineqs;
  for (const auto& y : dual.rays) {
    bool supports_a_vertex = false;
    for (const auto& pr : point_rows)
      if (dot(y, pr) == 0) {
        supports_a_vertex = true;
        break;
      }
    if (!supports_a_vertex) continue;
    IntegerVector a(y.begin(), y.end() - 1);
    Integer g = content(a);
    if (g == 0) continue;
    for (auto& x : a) x /= g;
    Rational off(-y[n], g);
    off.canonicalize();
    ineqs.insert({std::move(a), off});
  }
  h.inequalities.assign(ineqs.begin(), ineqs.end());
  return h;
}

Polyhedron Polyhedron::from_canonical_v(VPolyhedron v) {
  Polyhedron p;
  p.h_ = dualize(v);
  p.v_ = std::move(v);
  if (p.v_.empty) {
    p.dim_ = -1;
  } else {
    std::vector<IntegerVector> normals;
    for (const auto& e : p.h_.equations) normals.push_back(e.normal);
    p.dim_ = static_cast<int>(p.v_.ambient_dim - rank(normals, p.v_.ambient_dim));
  }
  return p;
}

Polyhedron Polyhedron::from_h(const HPolyhedron& h) {
  HPolyhedron copy = h;
  for (auto& c : copy.inequalities) c.offset.canonicalize();
  for (auto& c : copy.equations) c.offset.canonicalize();
  return from_canonical_v(dualize(copy));
}

Polyhedron Polyhedron::from_generators(std::size_t n, const std::vector<RationalVector>& points,
                                       const std::vector<IntegerVector>& rays,
                                       const std::vector<IntegerVector>& lineality) {
  if (points.empty()) return empty(n);
  VPolyhedron raw;
  raw.ambient_dim = n;
  raw.vertices.reserve(points.size());
  for (const auto& x : points) raw.vertices.push_back(canonical(x));
  raw.rays = rays;
  raw.lineality = Sublattice(lineality, n);
  HPolyhedron h = dualize(raw);
  Polyhedron p;
  p.v_ = dualize(h);
  p.h_ = std::move(h);
  std::vector<IntegerVector> normals;
  for (const auto& e : p.h_.equations) normals.push_back(e.normal);
  p.dim_ = static_cast<int>(n - rank(normals, n));
  return p;
}

Polyhedron Polyhedron::empty(std::size_t n) {
  Polyhedron p;
  p.h_ = empty_h(n);
  p.v_.ambient_dim = n;
  p.v_.empty = true;
  p.v_.lineality = Sublattice(n);
  p.dim_ = -1;
  return p;
}

Polyhedron Polyhedron::universe(std::size_t n) {
  HPolyhedron h;
  h.ambient_dim = n;
  return from_h(h);
}

Polyhedron Polyhedron::point(const RationalVector& x) { return from_generators(x.size(), {x}); }

Polyhedron Polyhedron::cone(std::size_t n, const std::vector<IntegerVector>& rays,
                            const std::vector<IntegerVector>& lineality) {
  return from_generators(n, {RationalVector(n)}, rays, lineality);
}

bool Polyhedron::contains(const RationalVector& point) const {
  if (point.size() != ambient_dim()) throw TropicalError(ErrorKind::DimensionMismatch, "point membership");
  if (is_empty()) return false;
  const RationalVector x = canonical(point);
  for (const auto& e : h_.equations)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& c : h_.inequalities)
    if (dot(c.normal, x) > c.offset) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
  if (other.ambient_dim() != ambient_dim()) throw TropicalError(ErrorKind::DimensionMismatch, "containment");
  if (other.is_empty()) return true;
  if (is_empty()) return false;
  for (const auto& x : other.vertices())
    if (!contains(x)) return false;
  for (const auto& r : other.rays()) {
    for (const auto& e : h_.equations)
      if (dot(e.normal, r) != 0) return false;
    for (const auto& c : h_.inequalities)
      if (dot(c.normal, r) > 0) return false;
  }
  for (const auto& l : other.lineality().generators()) {
    for (const auto& e : h_.equations)
      if (dot(e.normal, l) != 0) return false;
    for (const auto& c : h_.inequalities)
      if (dot(c.normal, l) != 0) return false;
  }
  return true;
}

bool Polyhedron::in_relative_interior(const RationalVector& point) const {
  if (!contains(point)) return false;
  const RationalVector x = canonical(point);
  for (const auto& c : h_.inequalities)
    if (dot(c.normal, x) == c.offset) return false;
  return true;
}

Polyhedron Polyhedron::translated(const RationalVector& shift_by) const {
  if (shift_by.size() != ambient_dim()) throw TropicalError(ErrorKind::DimensionMismatch, "translation");
  const RationalVector offset = canonical(shift_by);
  if (is_empty()) return *this;
  Polyhedron p = *this;
  for (auto& c : p.h_.inequalities) c.offset += dot(c.normal, offset);
  for (auto& e : p.h_.equations) e.offset += dot(e.normal, offset);
  // Vertices live in the orthogonal complement of the lineality space.
  RationalVector shift = ComplementProjector(v_.lineality)(offset);
  for (auto& x : p.v_.vertices) x = x + shift;
  return p;
}

Polyhedron Polyhedron::face_containing(const RationalVector& point) const {
  const RationalVector x = canonical(point);
  if (!contains(x)) throw TropicalError(ErrorKind::NotInSupport, "face_containing: point " + to_string(x) + " not in polyhedron");
  HPolyhedron h = h_;
  h.inequalities.clear();
  for (const auto& c : h_.inequalities) {
    if (dot(c.normal, x) == c.offset)
      h.equations.push_back(c);
    else
      h.inequalities.push_back(c);
  }
  if (h.equations.size() == h_.equations.size()) return *this;
  return from_h(h);
}

Polyhedron Polyhedron::tangent_cone(const RationalVector& point) const {
  const RationalVector x = canonical(point);
  if (!contains(x)) throw TropicalError(ErrorKind::NotInSupport, "tangent_cone: point " + to_string(x) + " not in polyhedron");
  HPolyhedron h;
  h.ambient_dim = ambient_dim();
  for (const auto& e : h_.equations) h.equations.push_back({e.normal, Rational(0)});
  for (const auto& c : h_.inequalities)
    if (dot(c.normal, x) == c.offset) h.inequalities.push_back({c.normal, Rational(0)});
  return from_h(h);
}

std::vector<Polyhedron> Polyhedron::facets() const {
  std::vector<Polyhedron> out;
  if (is_empty()) return out;
  for (std::size_t i = 0; i < h_.inequalities.size(); ++i) {
    HPolyhedron h = h_;
    h.equations.push_back(h.inequalities[i]);
    h.inequalities.erase(h.inequalities.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(from_h(h));
  }
  return out;
}

bool Polyhedron::is_face_of(const Polyhedron& other) const {
  if (is_empty()) return true;
  if (!other.contains(*this)) return false;
  return other.face_containing(relative_interior_point(*this)) == *this;
}

std::strong_ordering operator<=>(const Polyhedron& a, const Polyhedron& b) {
  if (auto c = a.v_.ambient_dim <=> b.v_.ambient_dim; c != 0) return c;
  if (auto c = a.v_.empty <=> b.v_.empty; c != 0) return c;
  if (a.v_.vertices != b.v_.vertices) return a.v_.vertices < b.v_.vertices ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.v_.rays != b.v_.rays) return a.v_.rays < b.v_.rays ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.v_.lineality == b.v_.lineality) return std::strong_ordering::equal;
  return a.v_.lineality.generators() < b.v_.lineality.generators() ? std::strong_ordering::less
                                                                   : std::strong_ordering::greater;
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw TropicalError(ErrorKind::DimensionMismatch, "intersect");
  if (p.is_empty()) return p;
  if (q.is_empty()) return q;
  HPolyhedron h = p.h();
  h.inequalities.insert(h.inequalities.end(), q.h().inequalities.begin(), q.h().inequalities.end());
  h.equations.insert(h.equations.end(), q.h().equations.begin(), q.h().equations.end());
  return Polyhedron::from_h(h);
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw TropicalError(ErrorKind::DimensionMismatch, "minkowski_sum");
  const std::size_t n = p.ambient_dim();
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(n);
  std::vector<RationalVector> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  std::vector<IntegerVector> rays = p.rays();
  rays.insert(rays.end(), q.rays().begin(), q.rays().end());
  std::vector<IntegerVector> lin = p.lineality().generators();
  for (auto& l : q.lineality().generators()) lin.push_back(std::move(l));
  return Polyhedron::from_generators(n, pts, rays, lin);
}

Polyhedron scaled(const Polyhedron& p, const Integer& factor) {
  if (factor < 0) throw TropicalError(ErrorKind::InvalidArgument, "negative dilation factor");
  if (p.is_empty()) return p;
  const std::size_t n = p.ambient_dim();
  if (factor == 0) return Polyhedron::point(RationalVector(n));
  std::vector<RationalVector> pts;
  for (const auto& x : p.vertices()) pts.push_back(Rational(factor) * x);
  return Polyhedron::from_generators(n, pts, p.rays(), p.lineality().generators());
}

Sublattice affine_span_lattice(const Polyhedron& p) {
  if (p.is_empty()) throw TropicalError(ErrorKind::EmptyPolyhedron, "affine_span_lattice of the empty polyhedron");
  const std::size_t n = p.ambient_dim();
  std::vector<IntegerVector> gens;
  const auto& vs = p.vertices();
  for (std::size_t i = 1; i < vs.size(); ++i) {
    IntegerVector d = clear_denominators(vs[i] - vs[0]);
    if (!is_zero(d)) gens.push_back(std::move(d));
  }
  for (const auto& r : p.rays()) gens.push_back(r);
  for (auto& l : p.lineality().generators()) gens.push_back(std::move(l));
  return saturate(Sublattice(gens, n), n);
}

namespace {

std::size_t affine_rank(const std::vector<RationalVector>& vs, const std::vector<std::size_t>& ids) {
  std::vector<IntegerVector> diffs;
  for (std::size_t i = 1; i < ids.size(); ++i) diffs.push_back(clear_denominators(vs[ids[i]] - vs[ids[0]]));
  return diffs.empty() ? 0 : rank(diffs, vs[0].size());
}

// Pulling triangulation: cone from the first vertex over the facets not containing it.
void triangulate(const std::vector<RationalVector>& vs, const std::vector<std::vector<bool>>& tight,
                 const std::vector<std::size_t>& face, std::size_t face_dim,
                 std::vector<std::vector<std::size_t>>& out) {
  if (face_dim == 0) {
    out.push_back({face[0]});
    return;
  }
  const std::size_t base = face[0];
  std::set<std::vector<std::size_t>> seen;
  for (const auto& row : tight) {
    std::vector<std::size_t> sub;
    for (std::size_t v : face)
      if (row[v]) sub.push_back(v);
    if (sub.empty() || sub.size() == face.size() || row[base]) continue;
    if (!seen.insert(sub).second) continue;
    if (affine_rank(vs, sub) + 1 != face_dim) continue;
    std::vector<std::vector<std::size_t>> part;
    triangulate(vs, tight, sub, face_dim - 1, part);
    for (auto& s : part) {
      s.push_back(base);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

Rational euclidean_volume(const Polyhedron& p) {
  if (p.is_empty()) return 0;
  if (!p.is_bounded()) throw TropicalError(ErrorKind::Unbounded, "euclidean_volume of an unbounded polyhedron");
  const std::size_t n = p.ambient_dim();
  if (p.dim() < static_cast<int>(n)) return 0;
  const auto& vs = p.vertices();
  std::vector<std::vector<bool>> tight;
  for (const auto& c : p.h().inequalities) {
    std::vector<bool> row(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) row[i] = dot(c.normal, vs[i]) == c.offset;
    tight.push_back(std::move(row));
  }
  std::vector<std::size_t> all(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> simplices;
  triangulate(vs, tight, all, n, simplices);

  Rational total = 0;
  for (const auto& s : simplices) {
    std::vector<RationalVector> rows;
    for (std::size_t i = 1; i < s.size(); ++i) rows.push_back(vs[s[i]] - vs[s[0]]);
    // Determinant of a rational matrix via common denominators.
    Integer den = 1;
    IntegerMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      Integer l = 1;
      for (const auto& x : rows[r]) l = lcm(l, Integer(x.get_den()));
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c].get_num() * (l / rows[r][c].get_den());
      den *= l;
    }
    total += make_rational(abs(determinant(m)), den);
  }
  Integer fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
  total /= fact;
  total.canonicalize();
  return total;
}

RationalVector relative_interior_point(const Polyhedron& p) {
  if (p.is_empty()) throw TropicalError(ErrorKind::EmptyPolyhedron, "relative_interior_point of the empty polyhedron");
  const std::size_t n = p.ambient_dim();
  RationalVector x(n);
  for (const auto& v : p.vertices()) x = x + v;
  x = Rational(1, static_cast<unsigned long>(p.vertices().size())) * x;
  for (const auto& r : p.rays())
    for (std::size_t i = 0; i < n; ++i) x[i] += r[i];
  for (auto& c : x) c.canonicalize();
  return x;
}

Polyhedron recession_cone(const Polyhedron& p) {
  if (p.is_empty()) throw TropicalError(ErrorKind::EmptyPolyhedron, "recession_cone of the empty polyhedron");
  HPolyhedron h;
  h.ambient_dim = p.ambient_dim();
  for (const auto& c : p.h().inequalities) h.inequalities.push_back({c.normal, Rational(0)});
  for (const auto& e : p.h().equations) h.equations.push_back({e.normal, Rational(0)});
  return Polyhedron::from_h(h);
}

std::vector<Polyhedron> all_faces(const Polyhedron& p) {
  std::vector<Polyhedron> out;
  if (p.is_empty()) return out;
  std::set<Polyhedron> seen{p};
  std::vector<Polyhedron> frontier{p};
  while (!frontier.empty()) {
    std::vector<Polyhedron> next;
    for (const auto& f : frontier)
      for (auto& g : f.facets())
        if (!g.is_empty() && seen.insert(g).second) next.push_back(std::move(g));
    frontier = std::move(next);
  }
  out.assign(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Polyhedron& a, const Polyhedron& b) { return a.dim() > b.dim(); });
  return out;
}

}  // namespace tropical
