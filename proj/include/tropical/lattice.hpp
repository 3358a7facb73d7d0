#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropical/arith.hpp"

namespace tropical {

// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows, std::size_t cols);
  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerVector row(std::size_t r) const;
  std::vector<IntegerVector> row_vectors() const;
  IntegerMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::string to_string(const IntegerMatrix& m);

struct HermiteForm {
  IntegerMatrix h;  // row-style HNF
  IntegerMatrix u;  // unimodular with h = u * m
};

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows at the bottom.
HermiteForm hermite_normal_form(const IntegerMatrix& m);

struct SmithForm {
  std::vector<Integer> diagonal;  // d1 | d2 | ... , length min(rows, cols)
  IntegerMatrix left;              // unimodular U
  IntegerMatrix right;             // unimodular V with U * m * V = diag
  IntegerMatrix right_inverse;     // V^{-1}
};

SmithForm smith_decomposition(const IntegerMatrix& m);
std::vector<Integer> smith_normal_form(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const std::vector<IntegerVector>& rows, std::size_t cols);
Integer determinant(const IntegerMatrix& m);

// v / gcd(v). Throws ZeroVector.
IntegerVector primitive_vector(const IntegerVector& v);

// Integer basis (rows) of { x in Z^n : m x = 0 }; always saturated.
IntegerMatrix integer_kernel(const IntegerMatrix& m);

// A sublattice of Z^n, stored by its row-style HNF basis so that equal
// sublattices compare equal.
class Sublattice {
 public:
  Sublattice() = default;
  explicit Sublattice(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}
  Sublattice(const std::vector<IntegerVector>& generators, std::size_t ambient_dim);
  static Sublattice full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntegerMatrix& basis() const { return basis_; }
  std::vector<IntegerVector> generators() const { return basis_.row_vectors(); }

  bool contains(const IntegerVector& v) const;
  bool is_saturated() const;

  friend bool operator==(const Sublattice&, const Sublattice&) = default;
  friend bool operator<(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
    return a.basis_.row_vectors() < b.basis_.row_vectors();
  }

 private:
  std::size_t ambient_dim_ = 0;
  IntegerMatrix basis_;
};

Sublattice operator+(const Sublattice& a, const Sublattice& b);

// [Z^n : a + b], or infinite when a + b has rank < n.
class LatticeIndex {
 public:
  static LatticeIndex infinite() { return LatticeIndex(); }
  static LatticeIndex finite(Integer value) { return LatticeIndex(std::move(value)); }

  bool is_infinite() const { return !value_.has_value(); }
  const Integer& value() const;

  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;

 private:
  LatticeIndex() = default;
  explicit LatticeIndex(Integer v) : value_(std::move(v)) {}
  std::optional<Integer> value_;
};

LatticeIndex lattice_index(const Sublattice& a, const Sublattice& b, std::size_t n);
// Index of a single sublattice in Z^n.
LatticeIndex lattice_index(const Sublattice& a, std::size_t n);

// Smallest saturated sublattice containing a, i.e. span_R(a) ∩ Z^n.
Sublattice saturate(const Sublattice& a, std::size_t n);

// A unimodular n x n matrix whose first rank rows are a basis of the
// saturated lattice s. Rows past the rank complete it to a basis of Z^n.
IntegerMatrix completed_basis(const Sublattice& s);

// Exact inverse of a unimodular matrix.
IntegerMatrix unimodular_inverse(const IntegerMatrix& u);

}  // namespace tropical
