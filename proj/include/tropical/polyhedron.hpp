#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "tropical/arith.hpp"
#include "tropical/lattice.hpp"

namespace tropical {

// Exact double description is exponential; this is the supported ceiling.
inline constexpr std::size_t kMaxAmbientDim = 6;

// <normal, x> <= offset (or = offset when used as an equation).
struct Constraint {
  IntegerVector normal;
  Rational offset;

  friend bool operator==(const Constraint&, const Constraint&) = default;
  friend bool operator<(const Constraint& a, const Constraint& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

struct HPolyhedron {
  std::size_t ambient_dim = 0;
  std::vector<Constraint> inequalities;
  std::vector<Constraint> equations;
};

struct VPolyhedron {
  std::size_t ambient_dim = 0;
  bool empty = false;
  std::vector<RationalVector> vertices;
  std::vector<IntegerVector> rays;
  Sublattice lineality;
};

// Extreme rays and lineality of { x : a.x <= 0 for a in inequalities, a.x = 0 for a in equations }.
struct ConeGenerators {
  std::vector<IntegerVector> rays;
  std::vector<IntegerVector> lineality;
};
ConeGenerators cone_generators(std::size_t dim, const std::vector<IntegerVector>& inequalities,
                               const std::vector<IntegerVector>& equations);

// Double-description conversions. Both throw UnsupportedDimension above kMaxAmbientDim.
VPolyhedron dualize(const HPolyhedron& h);
HPolyhedron dualize(const VPolyhedron& v);

// An integral Q-affine polyhedron kept in both descriptions. The V-form is
// canonical (vertices projected orthogonally to the lineality space, rays
// primitive, everything sorted), so structural equality is set equality.
// The H-form is irredundant.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_h(const HPolyhedron& h);
  static Polyhedron from_generators(std::size_t n, const std::vector<RationalVector>& points,
                                    const std::vector<IntegerVector>& rays = {},
                                    const std::vector<IntegerVector>& lineality = {});
  static Polyhedron empty(std::size_t n);
  static Polyhedron universe(std::size_t n);
  static Polyhedron point(const RationalVector& p);
  static Polyhedron cone(std::size_t n, const std::vector<IntegerVector>& rays,
                         const std::vector<IntegerVector>& lineality = {});

  std::size_t ambient_dim() const { return v_.ambient_dim; }
  // -1 for the empty polyhedron.
  int dim() const { return dim_; }
  bool is_empty() const { return v_.empty; }
  bool is_bounded() const { return !v_.empty && v_.rays.empty() && v_.lineality.rank() == 0; }

  const HPolyhedron& h() const { return h_; }
  const VPolyhedron& v() const { return v_; }
  const std::vector<RationalVector>& vertices() const { return v_.vertices; }
  const std::vector<IntegerVector>& rays() const { return v_.rays; }
  const Sublattice& lineality() const { return v_.lineality; }

  bool contains(const RationalVector& x) const;
  bool contains(const Polyhedron& other) const;
  bool in_relative_interior(const RationalVector& x) const;

  Polyhedron translated(const RationalVector& offset) const;
  // Smallest face containing x. x must lie in the polyhedron.
  Polyhedron face_containing(const RationalVector& x) const;
  // The cone R>=0 (P - x) for x in P, as a polyhedron with apex at the origin.
  Polyhedron tangent_cone(const RationalVector& x) const;
  std::vector<Polyhedron> facets() const;
  bool is_face_of(const Polyhedron& other) const;

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(const Polyhedron& a, const Polyhedron& b);

 private:
  struct Key {
    std::size_t n;
    bool empty;
    const std::vector<RationalVector>* vertices;
    const std::vector<IntegerVector>* rays;
    const Sublattice* lineality;
    bool operator==(const Key& o) const {
      return n == o.n && empty == o.empty && *vertices == *o.vertices && *rays == *o.rays && *lineality == *o.lineality;
    }
  };
  Key key() const { return {v_.ambient_dim, v_.empty, &v_.vertices, &v_.rays, &v_.lineality}; }

  static Polyhedron from_canonical_v(VPolyhedron v);

  HPolyhedron h_;
  VPolyhedron v_;
  int dim_ = -1;
};

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);
Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);
// Dilation by a nonnegative integer factor.
Polyhedron scaled(const Polyhedron& p, const Integer& factor);

// Saturated sublattice parallel to the affine span. Throws EmptyPolyhedron.
Sublattice affine_span_lattice(const Polyhedron& p);
// Exact euclidean volume in R^n; 0 for lower-dimensional polytopes. Throws Unbounded.
Rational euclidean_volume(const Polyhedron& p);
// Average of the vertices plus the sum of the rays. Throws EmptyPolyhedron.
RationalVector relative_interior_point(const Polyhedron& p);
Polyhedron recession_cone(const Polyhedron& p);

// Every nonempty face, including p itself, in a deterministic order.
std::vector<Polyhedron> all_faces(const Polyhedron& p);

}  // namespace tropical
