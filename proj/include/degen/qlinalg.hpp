#pragma once

// Exact linear algebra over Q and Z.
//
// Everything here is backed by GMP integers and rationals; no floating point
// is involved anywhere. Matrices are dense and row-major, which is plenty for
// the desk-scale problems this library targets (a few hundred rows at most).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "degen/error.hpp"

namespace degen {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols_if_empty = 0) {
    Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix column_vector(const std::vector<T>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const T& x) { return x == 0; });
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix columns(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < idx.size(); ++c) m(i, c) = (*this)(i, idx[c]);
    return m;
  }

  Matrix row_range(std::size_t begin, std::size_t end) const {
    Matrix m(end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  // Adds `block` into this matrix with its top-left corner at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Matrix& block,
                 const T& scale = T(1)) {
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
      throw DimensionError("block does not fit");
    for (std::size_t i = 0; i < block.rows_; ++i)
      for (std::size_t j = 0; j < block.cols_; ++j)
        (*this)(r0 + i, c0 + j) += scale * block(i, j);
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) += factor * (*this)(i, src);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product " + a.shape() + " * " + b.shape());
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw DimensionError("shape mismatch " + shape() + " vs " + b.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  m.add_block(0, 0, a);
  m.add_block(0, a.cols(), b);
  return m;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
  Matrix<T> m(a.rows() + b.rows(), a.cols());
  m.add_block(0, 0, a);
  m.add_block(a.rows(), 0, b);
  return m;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

inline std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j).get_str();
    }
  }
  os << ']';
  return os.str();
}

inline std::string to_string(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Rank, kernels, images over Q
// ---------------------------------------------------------------------------

namespace detail {

// Rank of an integer matrix by fraction-free (Bareiss) elimination. Every
// division below is exact.
inline std::size_t bareiss_rank(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace detail

/// Rank over Q. Rows are scaled to integers and reduced fraction-free.
inline std::size_t rank(const RatMatrix& m) {
  IntMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return detail::bareiss_rank(std::move(a));
}

/// Reduced row echelon form together with its pivot columns.
struct Rref {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;
};

inline Rref rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      m.add_row(i, r, Rational(-m(i, c)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Columns form a basis of the right kernel; column count is cols - rank.
inline RatMatrix kernel_basis(const RatMatrix& m) {
  const Rref red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  RatMatrix k(m.cols(), m.cols() - red.pivots.size());
  std::size_t out = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(f, out) = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
      k(red.pivots[i], out) = -red.matrix(i, f);
    ++out;
  }
  return k;
}

/// Basis of the column space, taken from the original columns.
inline RatMatrix image_basis(const RatMatrix& m) {
  return m.columns(rref(m).pivots);
}

/// dim(ambient) - rank(sub), where the columns of `sub` live in the ambient.
inline std::size_t quotient_dim(const RatMatrix& sub, std::size_t ambient_dim) {
  if (sub.rows() != ambient_dim)
    throw DimensionError("quotient_dim: subspace has " +
                         std::to_string(sub.rows()) + " rows, ambient is " +
                         std::to_string(ambient_dim));
  return ambient_dim - rank(sub);
}

/// A subspace of Q^n held as a reduced row basis. `reduce` returns the
/// canonical representative of a vector modulo the subspace, so two vectors
/// differing by an element of the subspace reduce to the same result.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  /// Span of the columns of `spanning`.
  explicit Subspace(const RatMatrix& spanning) : ambient_(spanning.rows()) {
    Rref red = rref(spanning.transpose());
    pivots_ = red.pivots;
    basis_ = red.matrix.row_range(0, pivots_.size());
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }

  std::vector<Rational> reduce(std::vector<Rational> v) const {
    if (v.size() != ambient_) throw DimensionError("Subspace::reduce");
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Rational f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_(i, j);
    }
    return v;
  }

  RatMatrix reduce_columns(const RatMatrix& m) const {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto v = reduce(m.column(c));
      for (std::size_t i = 0; i < v.size(); ++i) out(i, c) = v[i];
    }
    return out;
  }

  bool contains(const std::vector<Rational>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
  }

 private:
  std::size_t ambient_;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Smith normal form and finitely presented abelian groups
// ---------------------------------------------------------------------------

/// left * original * right == diagonal(diag), with d_i | d_{i+1}.
struct SmithForm {
  std::vector<Integer> diag;  // length min(rows, cols); zeros trail
  IntMatrix left;
  IntMatrix right;

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diag.begin(), diag.end(), [](const Integer& d) { return d != 0; }));
  }
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: smallest nonzero magnitude in the trailing block
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      a.swap_rows(t, pr);
      u.swap_rows(t, pr);
      a.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);  // truncating division
        a.add_row(i, t, Integer(-q));
        u.add_row(i, t, Integer(-q));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col(j, t, Integer(-q));
        v.add_col(j, t, Integer(-q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row and retry
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, Integer(1));
            u.add_row(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }

  SmithForm sf;
  sf.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) sf.diag[i] = a(i, i);
  sf.left = std::move(u);
  sf.right = std::move(v);
  return sf;
}

/// Columns generate the integer right kernel (a basis of it, in fact).
inline IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm sf = smith_normal_form(m);
  std::vector<std::size_t> idx;
  for (std::size_t j = sf.rank(); j < m.cols(); ++j) idx.push_back(j);
  return sf.right.columns(idx);
}

/// True iff `target` lies in the Z-span of the columns of `gens`.
inline bool in_lattice(const IntMatrix& gens, const std::vector<Integer>& target) {
  if (target.size() != gens.rows()) throw DimensionError("in_lattice");
  SmithForm sf = smith_normal_form(gens);
  const std::size_t r = sf.rank();
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    Integer y = 0;
    for (std::size_t k = 0; k < gens.rows(); ++k) y += sf.left(i, k) * target[k];
    if (i < r) {
      if (y % sf.diag[i] != 0) return false;
    } else if (y != 0) {
      return false;
    }
  }
  return true;
}

/// Z^generators modulo the column span of `relations`.
struct FPAbelianGroup {
  std::size_t generators = 0;
  IntMatrix relations;  // generators x (number of relations)

  FPAbelianGroup() = default;
  FPAbelianGroup(std::size_t gens, IntMatrix rels)
      : generators(gens), relations(std::move(rels)) {
    if (relations.rows() != generators)
      throw DimensionError("relation matrix has " + std::to_string(relations.rows()) +
                           " rows for " + std::to_string(generators) + " generators");
  }

  static FPAbelianGroup free(std::size_t rank) { return {rank, IntMatrix(rank, 0)}; }

  /// Direct sum of cyclic groups Z/d_i (d_i = 0 gives a copy of Z).
  static FPAbelianGroup cyclic_sum(const std::vector<Integer>& orders) {
    IntMatrix rel(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
    return {orders.size(), std::move(rel)};
  }

  friend bool operator==(const FPAbelianGroup&, const FPAbelianGroup&) = default;
};

/// Homomorphism given on generators: column j is the image of source
/// generator j in target coordinates.
struct AbMap {
  FPAbelianGroup source;
  FPAbelianGroup target;
  IntMatrix matrix;  // target.generators x source.generators

  friend bool operator==(const AbMap&, const AbMap&) = default;
};

/// Order of a finitely generated abelian group, or infinity when the free
/// rank is positive.
class GroupOrder {
 public:
  static GroupOrder infinite() { return GroupOrder(); }
  static GroupOrder finite(Integer n) { return GroupOrder(std::move(n)); }

  bool is_infinite() const { return !value_.has_value(); }
  const Integer& value() const {
    if (!value_) throw ContractError("order is infinite");
    return *value_;
  }
  std::string str() const { return value_ ? value_->get_str() : "infinite"; }

  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;

 private:
  GroupOrder() = default;
  explicit GroupOrder(Integer n) : value_(std::move(n)) {}
  std::optional<Integer> value_;
};

/// Index [Z^n : span(gens)] restricted to the saturation of span(gens);
/// i.e. the product of the nonzero elementary divisors.
inline Integer saturation_index(const SmithForm& sf) {
  Integer p = 1;
  for (const auto& d : sf.diag)
    if (d != 0) p *= d;
  return p;
}

/// Checks that the map carries source relations into the target relation
/// lattice, i.e. that it is well defined on the quotients.
inline bool well_formed(const AbMap& f) {
  if (f.matrix.rows() != f.target.generators || f.matrix.cols() != f.source.generators)
    return false;
  IntMatrix images = f.matrix * f.source.relations;
  for (std::size_t c = 0; c < images.cols(); ++c)
    if (!in_lattice(f.target.relations, images.column(c))) return false;
  return true;
}

inline void require_well_formed(const AbMap& f) {
  if (f.matrix.rows() != f.target.generators || f.matrix.cols() != f.source.generators)
    throw ContractError("map matrix is " + f.matrix.shape() + ", expected " +
                        std::to_string(f.target.generators) + "x" +
                        std::to_string(f.source.generators));
  if (!well_formed(f))
    throw ContractError("map does not carry source relations into target relations");
}

/// Order of ker(f). The kernel is the lattice L = {x : f(x) in target
/// relations} modulo the source relations; its order is the index of the
/// relation lattice in L, read off from the two Smith forms.
inline GroupOrder kernel_order(const AbMap& f) {
  require_well_formed(f);
  const std::size_t gs = f.source.generators;
  IntMatrix stacked = hstack(f.matrix, -f.target.relations);
  IntMatrix lgens = integer_kernel(stacked).row_range(0, gs);
  SmithForm sl = smith_normal_form(lgens);
  SmithForm sr = smith_normal_form(f.source.relations);
  if (sl.rank() > sr.rank()) return GroupOrder::infinite();
  return GroupOrder::finite(saturation_index(sr) / saturation_index(sl));
}

/// Order of target / (image + target relations).
inline GroupOrder cokernel_order(const AbMap& f) {
  require_well_formed(f);
  SmithForm sf = smith_normal_form(hstack(f.matrix, f.target.relations));
  if (sf.rank() < f.target.generators) return GroupOrder::infinite();
  return GroupOrder::finite(saturation_index(sf));
}

/// Order of the group itself.
inline GroupOrder group_order(const FPAbelianGroup& g) {
  SmithForm sf = smith_normal_form(g.relations);
  if (sf.rank() < g.generators) return GroupOrder::infinite();
  return GroupOrder::finite(saturation_index(sf));
}

}  // namespace degen
