#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropical/complex.hpp"
#include "tropical/valued_poly.hpp"

namespace tropical {

// One verified face pair of the genericity certificate: pair index in the
// input list, the two faces, and the dimension of F ∩ (G + v) (-1 if empty).
struct GenericityCheck {
  std::size_t pair;
  Polyhedron face;
  Polyhedron other_face;
  int intersection_dim;
};

struct DisplacementVector {
  RationalVector v;
  std::vector<GenericityCheck> certificate;
};

// Cones are displaced as first ∩ (second + v). Candidates are the moment
// curve points (1, t, ..., t^(n-1)) for t = 2, 3, 5, 7, ...; the
// choice-th (from 0) candidate passing every face-pair check is returned.
DisplacementVector pick_generic_vector(const std::vector<std::pair<Polyhedron, Polyhedron>>& cones, std::size_t n,
                                       std::size_t choice = 0);

// Local displacement rule at a cell tau of the common refinement. With an
// ambient complex, tau must lie in the relative interior of an ambient facet;
// the rule then runs in the affine-span lattice of that facet.
Integer local_intersection_multiplicity(const WeightedComplex& a, const WeightedComplex& b, const Polyhedron& tau,
                                        const WeightedComplex* ambient = nullptr);

struct StableOptions {
  // Which certified displacement vector to use.
  std::size_t displacement_choice = 0;
  // Intersect inside this complex. Cells in its codimension-one skeleton are dropped.
  const WeightedComplex* ambient = nullptr;
};

WeightedComplex stable_intersection(const WeightedComplex& a, const WeightedComplex& b,
                                    const StableOptions& options = {});
// Computed on the diagonal of (R^n)^r.
WeightedComplex stable_intersection_multi(const std::vector<WeightedComplex>& complexes,
                                          std::size_t displacement_choice = 0);

// Integer weights on the codimension-codim cones of a complete simplicial fan.
struct MinkowskiWeight {
  PolyhedralComplex fan;
  int codim = 0;
  std::map<std::size_t, Integer> weights;

  static MinkowskiWeight from_cones(const PolyhedralComplex& fan, int codim,
                                    const std::vector<std::pair<Polyhedron, Integer>>& weights);
  Integer weight(const Polyhedron& cone) const;
};

// Throws IncompatibleFans unless the cones form a complete simplicial fan.
void check_complete_simplicial_fan(const PolyhedralComplex& fan);
std::vector<Violation> check_balancing(const MinkowskiWeight& c);
// Fan displacement rule. Throws IncompatibleFans.
MinkowskiWeight minkowski_product(const MinkowskiWeight& c, const MinkowskiWeight& d, std::size_t displacement_choice = 0);

// Coefficient of b1...bn in vol(b1 Q1 + ... + bn Qn). Throws Unbounded or InvalidArgument.
Rational mixed_volume(const std::vector<Polyhedron>& polytopes);
// Mixed volume of the dual cells at an isolated intersection point. Throws NotIsolated.
Integer complete_intersection_count(const std::vector<ValuedLaurentPoly>& polys, const RationalVector& w);

// Pure of the expected dimension near w. Throws NotInSupport.
bool check_proper(const WeightedComplex& a, const WeightedComplex& b, const RationalVector& w,
                  const WeightedComplex* ambient = nullptr);

struct LiftReport {
  enum class Verdict { Lifts, NoGuarantee };
  RationalVector point;
  bool proper = false;
  bool simple_ambient = false;
  Verdict verdict = Verdict::NoGuarantee;
  Integer total_multiplicity = 0;
  std::string notes;
};

std::string_view verdict_name(LiftReport::Verdict v);

LiftReport lifting_report(const WeightedComplex& a, const WeightedComplex& b, const RationalVector& w,
                          const WeightedComplex* ambient = nullptr);

}  // namespace tropical
