#include <random>

#include "doctest.h"
#include "tropical/error.hpp"
#include "tropical/polyhedron.hpp"

using namespace tropical;

namespace {

IntegerVector iv(std::initializer_list<long> c) { return make_integer_vector(c); }
RationalVector rv(std::initializer_list<long> c) { return make_rational_vector(c); }

Constraint le(std::initializer_list<long> normal, long offset) { return {iv(normal), Rational(offset)}; }

HPolyhedron hpoly(std::size_t n, std::vector<Constraint> ineqs, std::vector<Constraint> eqs = {}) {
  return {n, std::move(ineqs), std::move(eqs)};
}

Polyhedron simplex2() { return Polyhedron::from_generators(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})}); }
Polyhedron segment(RationalVector a, RationalVector b) { return Polyhedron::from_generators(a.size(), {a, b}); }

// Shoelace area of a convex polygon given by its vertex set (sorted by angle here).
Rational shoelace(std::vector<RationalVector> pts) {
  RationalVector c = rv({0, 0});
  for (const auto& p : pts) c = c + p;
  c = Rational(1, pts.size()) * c;
  auto quadrant_less = [&](const RationalVector& a, const RationalVector& b) {
    RationalVector da = a - c, db = b - c;
    auto half = [](const RationalVector& d) { return (d[1] < 0 || (d[1] == 0 && d[0] < 0)) ? 1 : 0; };
    if (half(da) != half(db)) return half(da) < half(db);
    return da[0] * db[1] - da[1] * db[0] > 0;
  };
  std::sort(pts.begin(), pts.end(), quadrant_less);
  Rational twice = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    twice += p[0] * q[1] - p[1] * q[0];
  }
  return abs(twice) / 2;
}

Polyhedron random_lattice_polytope(std::mt19937& rng, std::size_t n, int count, long lo, long hi) {
  std::uniform_int_distribution<long> coord(lo, hi);
  std::vector<RationalVector> pts;
  for (int i = 0; i < count; ++i) {
    RationalVector p(n);
    for (auto& x : p) x = coord(rng);
    pts.push_back(p);
  }
  return Polyhedron::from_generators(n, pts);
}

}  // namespace

TEST_CASE("dualize: standard simplex, line and infeasible system") {
  auto v = dualize(hpoly(2, {le({-1, 0}, 0), le({0, -1}, 0), le({1, 1}, 1)}));
  CHECK_FALSE(v.empty);
  CHECK(v.vertices == std::vector<RationalVector>{rv({0, 0}), rv({0, 1}), rv({1, 0})});
  CHECK(v.rays.empty());
  CHECK(v.lineality.rank() == 0);

  auto line = dualize(hpoly(2, {}, {le({1, 0}, 0)}));
  CHECK(line.vertices == std::vector<RationalVector>{rv({0, 0})});
  CHECK(line.lineality == Sublattice({iv({0, 1})}, 2));

  auto none = dualize(hpoly(1, {le({1}, -1), le({-1}, -1)}));
  CHECK(none.empty);
}

TEST_CASE("dualize rejects dimensions above the limit") {
  HPolyhedron h;
  h.ambient_dim = kMaxAmbientDim + 1;
  CHECK_THROWS_AS(dualize(h), TropicalError);
  try {
    dualize(h);
  } catch (const TropicalError& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedDimension);
  }
}

TEST_CASE("intersect") {
  auto seg = intersect(simplex2(), Polyhedron::from_h(hpoly(2, {}, {le({1, 0}, 0)})));
  CHECK(seg == segment(rv({0, 0}), rv({0, 1})));

  auto r1 = Polyhedron::cone(2, {iv({1, 1})});
  auto r2 = Polyhedron::cone(2, {iv({1, -1})});
  CHECK(intersect(r1, r2) == Polyhedron::point(rv({0, 0})));

  auto far = simplex2().translated(rv({5, 5}));
  CHECK(intersect(simplex2(), far).is_empty());
  CHECK(intersect(simplex2(), far).dim() == -1);
  CHECK_THROWS_AS(intersect(simplex2(), Polyhedron::universe(3)), TropicalError);
}

TEST_CASE("minkowski_sum") {
  auto twice = minkowski_sum(simplex2(), simplex2());
  CHECK(twice.vertices() == std::vector<RationalVector>{rv({0, 0}), rv({0, 2}), rv({2, 0})});
  CHECK(twice == scaled(simplex2(), 2));

  auto square = minkowski_sum(segment(rv({0, 0}), rv({1, 0})), segment(rv({0, 0}), rv({0, 1})));
  CHECK(square.vertices().size() == 4);
  CHECK(euclidean_volume(square) == 1);

  auto pent = minkowski_sum(simplex2(), segment(rv({0, 1}), rv({2, 0})));
  CHECK(pent.vertices().size() == 5);
  CHECK(shoelace(pent.vertices()) == Rational(5, 2));
  CHECK(euclidean_volume(pent) == Rational(5, 2));
}

TEST_CASE("affine_span_lattice") {
  CHECK(affine_span_lattice(segment(rv({0, 0}), rv({2, 2}))) == Sublattice({iv({1, 1})}, 2));
  CHECK(affine_span_lattice(Polyhedron::point(rv({3, 4}))).rank() == 0);
  CHECK(affine_span_lattice(Polyhedron::cone(2, {iv({1, 0}), iv({1, 2})})) == Sublattice::full(2));
  CHECK_THROWS_AS(affine_span_lattice(Polyhedron::empty(2)), TropicalError);
}

TEST_CASE("euclidean_volume") {
  CHECK(euclidean_volume(simplex2()) == Rational(1, 2));
  CHECK(euclidean_volume(Polyhedron::from_generators(2, {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})})) == 1);
  CHECK(euclidean_volume(segment(rv({0, 0}), rv({3, 1}))) == 0);
  auto cube = Polyhedron::from_generators(3, {rv({0, 0, 0}), rv({2, 0, 0}), rv({0, 2, 0}), rv({0, 0, 2}), rv({2, 2, 0}),
                                             rv({2, 0, 2}), rv({0, 2, 2}), rv({2, 2, 2})});
  CHECK(euclidean_volume(cube) == 8);
  auto simplex3 = Polyhedron::from_generators(3, {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  CHECK(euclidean_volume(simplex3) == Rational(1, 6));
  CHECK_THROWS_AS(euclidean_volume(Polyhedron::cone(2, {iv({1, 0})})), TropicalError);
}

TEST_CASE("relative_interior_point") {
  CHECK(relative_interior_point(segment(rv({0, 0}), rv({2, 0}))) == rv({1, 0}));
  CHECK(relative_interior_point(Polyhedron::cone(2, {iv({1, 1})})) == rv({1, 1}));
  RationalVector c = relative_interior_point(simplex2());
  CHECK(c == RationalVector{Rational(1, 3), Rational(1, 3)});
  CHECK(simplex2().in_relative_interior(c));
  CHECK_THROWS_AS(relative_interior_point(Polyhedron::empty(2)), TropicalError);
}

TEST_CASE("recession_cone") {
  auto ray = Polyhedron::from_generators(2, {rv({1, 1})}, {iv({1, 0})});
  CHECK(recession_cone(ray) == Polyhedron::cone(2, {iv({1, 0})}));
  CHECK(recession_cone(simplex2()) == Polyhedron::point(rv({0, 0})));
  auto half = Polyhedron::from_h(hpoly(2, {le({1, 0}, 3)}));
  CHECK(recession_cone(half) == Polyhedron::from_h(hpoly(2, {le({1, 0}, 0)})));
}

TEST_CASE("faces of a square and of a cone with lineality") {
  auto sq = Polyhedron::from_generators(2, {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})});
  CHECK(all_faces(sq).size() == 9);
  auto wedge = Polyhedron::cone(3, {iv({1, 0, 0}), iv({0, 1, 0})}, {iv({0, 0, 1})});
  auto faces = all_faces(wedge);
  CHECK(faces.size() == 4);
  for (const auto& f : faces) CHECK(f.is_face_of(wedge));
  CHECK_FALSE(segment(rv({0, 0}), rv({1, 1})).is_face_of(sq));
}

TEST_CASE("tangent cones and faces at a point") {
  auto s = simplex2();
  CHECK(s.tangent_cone(rv({0, 0})) == Polyhedron::cone(2, {iv({1, 0}), iv({0, 1})}));
  CHECK(s.face_containing(RationalVector{Rational(1, 2), Rational(0)}) == segment(rv({0, 0}), rv({1, 0})));
  CHECK(s.tangent_cone(RationalVector{Rational(1, 2), Rational(0)}) ==
        Polyhedron::from_h(hpoly(2, {le({0, -1}, 0)})));
}

TEST_CASE("property: H/V round trip describes the same set") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 2;
    Polyhedron p = random_lattice_polytope(rng, n, 4 + trial % 5, -3, 3);
    Polyhedron from_h = Polyhedron::from_h(p.h());
    CHECK(from_h == p);
    for (const auto& x : p.vertices()) CHECK(from_h.contains(x));
    for (const auto& x : from_h.vertices()) CHECK(p.contains(x));
    CHECK(p.in_relative_interior(relative_interior_point(p)));
  }
}

TEST_CASE("property: volume is translation invariant and scales as lambda^d") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 2;
    Polyhedron p = random_lattice_polytope(rng, n, 5 + trial % 4, -2, 2);
    Rational v = euclidean_volume(p);
    RationalVector shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = Rational(static_cast<long>(i) + 1, 2);
    CHECK(euclidean_volume(p.translated(shift)) == v);
    for (long lambda : {2L, 3L}) {
      Rational expect = v;
      for (std::size_t i = 0; i < n; ++i) expect *= lambda;
      CHECK(euclidean_volume(scaled(p, lambda)) == expect);
    }
    if (n == 2) CHECK(v == (p.dim() == 2 ? shoelace(p.vertices()) : Rational(0)));
  }
}

TEST_CASE("property: vol(b1 P + b2 Q) is a homogeneous polynomial of degree n") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 2 + trial % 2;
    Polyhedron p = random_lattice_polytope(rng, n, 4, 0, 2);
    Polyhedron q = random_lattice_polytope(rng, n, 4, 0, 2);
    auto vol = [&](long b1, long b2) { return euclidean_volume(minkowski_sum(scaled(p, b1), scaled(q, b2))); };
    // Coefficients of b1^i b2^(n-i), fitted from b2 = 1, b1 = 0..n, then checked on the 3x3 grid.
    std::vector<Rational> coeff(n + 1);
    std::vector<RationalVector> a(n + 1, RationalVector(n + 1));
    RationalVector rhs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational pw = 1;
      for (std::size_t i = 0; i <= n; ++i) {
        a[k][i] = pw;
        pw *= static_cast<long>(k);
      }
      rhs[k] = vol(static_cast<long>(k), 1);
    }
    // Gaussian elimination on the Vandermonde system.
    for (std::size_t c = 0; c <= n; ++c) {
      std::size_t piv = c;
      while (a[piv][c] == 0) ++piv;
      std::swap(a[piv], a[c]);
      std::swap(rhs[piv], rhs[c]);
      for (std::size_t r = 0; r <= n; ++r) {
        if (r == c || a[r][c] == 0) continue;
        Rational f = a[r][c] / a[c][c];
        for (std::size_t k = 0; k <= n; ++k) a[r][k] -= f * a[c][k];
        rhs[r] -= f * rhs[c];
      }
    }
    for (std::size_t i = 0; i <= n; ++i) coeff[i] = rhs[i] / a[i][i];
    for (long b1 = 1; b1 <= 3; ++b1)
      for (long b2 = 1; b2 <= 3; ++b2) {
        Rational predicted = 0;
        for (std::size_t i = 0; i <= n; ++i) {
          Rational term = coeff[i];
          for (std::size_t k = 0; k < i; ++k) term *= b1;
          for (std::size_t k = i; k < n; ++k) term *= b2;
          predicted += term;
        }
        CHECK(vol(b1, b2) == predicted);
      }
  }
}

TEST_CASE("property: affine_span_lattice is independent of the generator presentation") {
  auto c1 = Polyhedron::cone(3, {iv({1, 0, 0}), iv({1, 2, 0})});
  auto c2 = Polyhedron::cone(3, {iv({1, 2, 0}), iv({2, 2, 0}), iv({1, 0, 0})});
  CHECK(c1 == c2);
  CHECK(affine_span_lattice(c1) == affine_span_lattice(c2));
  CHECK(affine_span_lattice(c1) == saturate(affine_span_lattice(c1), 3));
  CHECK(affine_span_lattice(c1) == Sublattice({iv({1, 0, 0}), iv({0, 1, 0})}, 3));
}
