#include "tropical/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "tropical/error.hpp"

namespace tropical {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntegerVector>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw TropicalError(ErrorKind::DimensionMismatch, "matrix row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  IntegerMatrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw TropicalError(ErrorKind::DimensionMismatch, "matrix row length");
    std::size_t c = 0;
    for (long x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

IntegerVector IntegerMatrix::row(std::size_t r) const {
  return IntegerVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<IntegerVector> IntegerMatrix::row_vectors() const {
  std::vector<IntegerVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw TropicalError(ErrorKind::DimensionMismatch, "matrix product");
  IntegerMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "," : "") << to_string(m.row(r));
  os << ']';
  return os.str();
}

namespace {

// Floor division, so remainders land in [0, |b|) for b > 0.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclid on column col among rows pivot_row.. until one nonzero remains.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = pivot_row; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        if (best == h.rows() || abs(h(r, col)) < abs(h(best, col))) best = r;
      }
      if (best == h.rows()) break;
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        Integer q = floor_div(h(r, col), h(pivot_row, col));
        h.add_row_multiple(r, pivot_row, -q);
        u.add_row_multiple(r, pivot_row, -q);
        if (h(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q = floor_div(h(r, col), h(pivot_row, col));
      h.add_row_multiple(r, pivot_row, -q);
      u.add_row_multiple(r, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

SmithForm smith_decomposition(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  IntegerMatrix left = IntegerMatrix::identity(m.rows());
  IntegerMatrix right = IntegerMatrix::identity(m.cols());
  IntegerMatrix right_inv = IntegerMatrix::identity(m.cols());

  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    left.add_row_multiple(dst, src, f);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    left.swap_rows(x, y);
  };
  // Column operation E applied on the right; its inverse acts on V^{-1} rows.
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    right.add_col_multiple(dst, src, f);
    right_inv.add_row_multiple(src, dst, -f);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    right.swap_cols(x, y);
    right_inv.swap_rows(x, y);
  };

  const std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t br = a.rows(), bc = a.cols();
    for (std::size_t r = t; r < a.rows(); ++r)
      for (std::size_t c = t; c < a.cols(); ++c)
        if (a(r, c) != 0 && (br == a.rows() || abs(a(r, c)) < abs(a(br, bc)))) {
          br = r;
          bc = c;
        }
    if (br == a.rows()) break;
    row_swap(t, br);
    col_swap(t, bc);
    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < a.rows(); ++r)
        if (a(r, t) != 0) row_add(r, t, -floor_div(a(r, t), a(t, t)));
      for (std::size_t c = t + 1; c < a.cols(); ++c)
        if (a(t, c) != 0) col_add(c, t, -floor_div(a(t, c), a(t, t)));
      // Bring the smallest leftover in row/column t to the pivot.
      std::size_t br2 = 0, bc2 = 0;
      bool found = false;
      for (std::size_t r = t + 1; r < a.rows(); ++r)
        if (a(r, t) != 0 && (!found || abs(a(r, t)) < abs(a(br2, bc2)))) {
          br2 = r;
          bc2 = t;
          found = true;
        }
      for (std::size_t c = t + 1; c < a.cols(); ++c)
        if (a(t, c) != 0 && (!found || abs(a(t, c)) < abs(a(br2, bc2)))) {
          br2 = t;
          bc2 = c;
          found = true;
        }
      if (found) {
        clean = false;
        if (br2 != t) row_swap(t, br2);
        if (bc2 != t) col_swap(t, bc2);
      }
      if (!clean) continue;
      // Divisibility of the remaining block.
      bool fixed = false;
      for (std::size_t r = t + 1; r < a.rows() && !fixed; ++r)
        for (std::size_t c = t + 1; c < a.cols(); ++c)
          if (a(r, c) % a(t, t) != 0) {
            row_add(t, r, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithForm out;
  out.diagonal.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  out.right_inverse = std::move(right_inv);
  return out;
}

std::vector<Integer> smith_normal_form(const IntegerMatrix& m) { return smith_decomposition(m).diagonal; }

std::size_t rank(const IntegerMatrix& m) {
  HermiteForm hf = hermite_normal_form(m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < hf.h.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t c = 0; c < hf.h.cols(); ++c)
      if (hf.h(i, c) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

std::size_t rank(const std::vector<IntegerVector>& rows, std::size_t cols) {
  // Fraction-free elimination; cheaper than a full HNF for rank queries.
  std::vector<IntegerVector> a = rows;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Integer f = a[i][c], g = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
      Integer cg = content(a[i]);
      if (cg > 1)
        for (auto& x : a[i]) x /= cg;
    }
    ++r;
  }
  return r;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw TropicalError(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss.
  IntegerMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntegerVector primitive_vector(const IntegerVector& v) {
  Integer g = content(v);
  if (g == 0) throw TropicalError(ErrorKind::ZeroVector, "primitive_vector of the zero vector");
  IntegerVector out = v;
  for (auto& c : out) c /= g;
  return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
  // Rows of U with U m^T = H that map to zero rows of H span the kernel.
  HermiteForm hf = hermite_normal_form(m.transposed());
  std::vector<IntegerVector> rows;
  for (std::size_t r = 0; r < hf.h.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < hf.h.cols(); ++c)
      if (hf.h(r, c) != 0) {
        zero = false;
        break;
      }
    if (zero) rows.push_back(hf.u.row(r));
  }
  return hermite_normal_form(IntegerMatrix::from_rows(rows, m.cols())).h;
}

Sublattice::Sublattice(const std::vector<IntegerVector>& generators, std::size_t ambient_dim)
    : ambient_dim_(ambient_dim) {
  IntegerMatrix h = hermite_normal_form(IntegerMatrix::from_rows(generators, ambient_dim)).h;
  std::vector<IntegerVector> rows;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    IntegerVector row = h.row(r);
    if (!is_zero(row)) rows.push_back(std::move(row));
  }
  basis_ = IntegerMatrix::from_rows(rows, ambient_dim);
}

Sublattice Sublattice::full(std::size_t ambient_dim) {
  return Sublattice(IntegerMatrix::identity(ambient_dim).row_vectors(), ambient_dim);
}

bool Sublattice::contains(const IntegerVector& v) const {
  if (v.size() != ambient_dim_) throw TropicalError(ErrorKind::DimensionMismatch, "sublattice membership");
  auto gens = generators();
  gens.push_back(v);
  return Sublattice(gens, ambient_dim_) == *this;
}

bool Sublattice::is_saturated() const { return saturate(*this, ambient_dim_) == *this; }

Sublattice operator+(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw TropicalError(ErrorKind::DimensionMismatch, "sublattice sum");
  auto gens = a.generators();
  for (auto& g : b.generators()) gens.push_back(std::move(g));
  return Sublattice(gens, a.ambient_dim());
}

const Integer& LatticeIndex::value() const {
  if (!value_) throw TropicalError(ErrorKind::InvalidArgument, "value of an infinite lattice index");
  return *value_;
}

LatticeIndex lattice_index(const Sublattice& a, std::size_t n) {
  if (a.ambient_dim() != n) throw TropicalError(ErrorKind::DimensionMismatch, "lattice_index");
  if (a.rank() < n) return LatticeIndex::infinite();
  Integer product = 1;
  for (const auto& d : smith_normal_form(a.basis())) product *= d;
  return LatticeIndex::finite(product);
}

LatticeIndex lattice_index(const Sublattice& a, const Sublattice& b, std::size_t n) {
  if (a.ambient_dim() != n || b.ambient_dim() != n)
    throw TropicalError(ErrorKind::DimensionMismatch, "lattice_index");
  auto gens = a.generators();
  for (auto& g : b.generators()) gens.push_back(std::move(g));
  if (gens.empty()) return n == 0 ? LatticeIndex::finite(1) : LatticeIndex::infinite();
  std::vector<Integer> d = smith_normal_form(IntegerMatrix::from_rows(gens, n));
  Integer product = 1;
  std::size_t nonzero = 0;
  for (const auto& x : d)
    if (x != 0) {
      product *= x;
      ++nonzero;
    }
  if (nonzero < n) return LatticeIndex::infinite();
  return LatticeIndex::finite(product);
}

Sublattice saturate(const Sublattice& a, std::size_t n) {
  if (a.ambient_dim() != n) throw TropicalError(ErrorKind::DimensionMismatch, "saturate");
  if (a.rank() == 0) return a;
  // m = U^{-1} D V^{-1}: the leading rows of V^{-1} span the rational row space.
  SmithForm sf = smith_decomposition(a.basis());
  std::vector<IntegerVector> rows;
  for (std::size_t i = 0; i < a.rank(); ++i) rows.push_back(sf.right_inverse.row(i));
  return Sublattice(rows, n);
}

IntegerMatrix completed_basis(const Sublattice& s) {
  const std::size_t n = s.ambient_dim();
  if (s.rank() == 0) return IntegerMatrix::identity(n);
  SmithForm sf = smith_decomposition(s.basis());
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (sf.diagonal[i] != 1) throw TropicalError(ErrorKind::InvalidArgument, "completed_basis needs a saturated lattice");
  return sf.right_inverse;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& u) {
  HermiteForm hf = hermite_normal_form(u);
  if (!(hf.h == IntegerMatrix::identity(u.rows())))
    throw TropicalError(ErrorKind::InvalidArgument, "matrix is not unimodular");
  return hf.u;
}

}  // namespace tropical
