#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropical/polyhedron.hpp"

namespace tropical {

// Cells of an embedded polyhedral complex, closed under taking faces and
// deduplicated. Possibly non-pure. Cells are ordered by decreasing dimension.
class PolyhedralComplex {
 public:
  PolyhedralComplex() = default;
  explicit PolyhedralComplex(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  // Adds every face of every given cell.
  static PolyhedralComplex from_cells(std::size_t ambient_dim, const std::vector<Polyhedron>& cells);

  std::size_t ambient_dim() const { return ambient_dim_; }
  // -1 when empty.
  int dim() const { return cells_.empty() ? -1 : cells_.front().dim(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  const Polyhedron& cell(std::size_t id) const { return cells_[id]; }
  // Codimension-one faces of cell id.
  const std::vector<std::size_t>& facets_of(std::size_t id) const { return facets_of_[id]; }
  // Cells that are not a proper face of another cell.
  std::vector<std::size_t> maximal_cells() const;
  std::vector<std::size_t> cells_containing(const RationalVector& x) const;
  bool support_contains(const RationalVector& x) const;
  // Id of the stored cell equal to p, or npos.
  std::size_t find(const Polyhedron& p) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Polyhedron> cells_;
  std::vector<std::vector<std::size_t>> facets_of_;
  std::map<Polyhedron, std::size_t> index_;
};

// A pure d-dimensional complex with integer multiplicities on its d-cells;
// the computational form of a tropicalization. A WeightedFan is a
// WeightedComplex whose cells are cones with apex at the origin.
class WeightedComplex {
 public:
  WeightedComplex() = default;
  // The empty complex of a given dimension.
  WeightedComplex(std::size_t ambient_dim, int dim) : cells_(ambient_dim), dim_(dim) {}

  // Facets may repeat; repeated multiplicities add up. Cells of a
  // dimension other than dim are rejected.
  static WeightedComplex from_facets(std::size_t ambient_dim, int dim,
                                     const std::vector<std::pair<Polyhedron, Integer>>& facets);
  // Loader form: arbitrary cells plus multiplicities keyed by cell. Faces
  // are added; invariants are checked by validate(), not here.
  static WeightedComplex from_cells(std::size_t ambient_dim, int dim, const std::vector<Polyhedron>& cells,
                                    const std::map<Polyhedron, Integer>& multiplicities);
  // R^n as a single cell of multiplicity 1.
  static WeightedComplex whole_space(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return cells_.ambient_dim(); }
  int dim() const { return dim_; }
  bool empty() const { return cells_.empty(); }
  const PolyhedralComplex& cells() const { return cells_; }
  const Polyhedron& cell(std::size_t id) const { return cells_.cell(id); }
  // Ids of the dim-dimensional cells.
  std::vector<std::size_t> facets() const;
  // 0 for cells without an assigned multiplicity.
  Integer multiplicity(std::size_t id) const;
  const std::map<std::size_t, Integer>& multiplicities() const { return multiplicities_; }
  Integer total_multiplicity() const;
  bool is_fan() const;

 private:
  PolyhedralComplex cells_;
  int dim_ = -1;
  std::map<std::size_t, Integer> multiplicities_;
};

using WeightedFan = WeightedComplex;

struct Violation {
  enum class Kind { Multiplicity, Purity, ComplexCondition, Balancing };
  Kind kind;
  std::size_t cell;
  std::size_t other;  // second cell of a pair, or npos
  std::string message;
};

std::string_view violation_name(Violation::Kind kind);

std::vector<Violation> validate(const WeightedComplex& c);
// Balancing of facet weights around every codimension-one cell.
std::vector<Violation> check_balancing(const WeightedComplex& c);
// Same test for an arbitrary cell list with integer weights on the
// dim-dimensional cells (used for Minkowski weights, which may be zero or negative).
std::vector<Violation> check_balancing(const PolyhedralComplex& cells, int dim,
                                       const std::map<std::size_t, Integer>& weights);

// Fan of cones R>=0 (sigma - w) over the cells containing w. Throws NotInSupport.
WeightedFan star(const WeightedComplex& c, const RationalVector& w);
bool is_simple_point(const WeightedComplex& c, const RationalVector& w);
// n minus the largest dimension of a cell containing w. Throws NotInSupport.
int codim_at(const PolyhedralComplex& c, const RationalVector& w);
int codim_at(const WeightedComplex& c, const RationalVector& w);

// Common refinement of the two supports' intersection; no multiplicities.
PolyhedralComplex set_intersection(const PolyhedralComplex& a, const PolyhedralComplex& b);
PolyhedralComplex set_intersection(const WeightedComplex& a, const WeightedComplex& b);

bool supports_equal(const WeightedComplex& a, const WeightedComplex& b);
// Also compares multiplicities on every facet of the common refinement.
bool weighted_supports_equal(const WeightedComplex& a, const WeightedComplex& b);

}  // namespace tropical
