#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pencilaid/error.hpp"
#include "pencilaid/polynomial.hpp"
#include "pencilaid/quadext.hpp"
#include "pencilaid/rational.hpp"

namespace pencilaid {

/// Dense row-major matrix. The entry type only needs value semantics; the
/// elimination routines below additionally need field operations.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
    requires std::default_initializable<T>
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transposed() const {
    if (data_.empty()) return Matrix(cols_, rows_, std::vector<T>{});
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<Poly>;
using QuadMatrix = Matrix<QuadExt>;

template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form over a field, in place. Pivots are taken column by
/// column from the left, using the first row at or below the current position
/// with a nonzero entry. Returns the pivot columns.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    const T one = one_like(m(r, c));
    if (!(m(r, c) == one)) {
      const T inv = one / m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    support.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) support.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const T f = m(i, c);
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
Echelon<T> rref(Matrix<T> m) {
  auto pivots = rref_in_place(m);
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref_in_place(m).size();
}

/// Right null space basis from the reduced form: one vector per free column,
/// with a one in that column. `zero` and `one` fix the field of the output.
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m, const T& zero, const T& one) {
  const auto pivots = rref_in_place(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!m(r, free).is_zero()) v[pivots[r]] = -m(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  return kernel_basis(m, Rat(0), Rat(1));
}

/// Null space over a quadratic extension. All entries must share one field;
/// throws Error(ModulusMismatch) otherwise, Error(InvalidInput) when the
/// matrix has no entries to take the field from.
std::vector<QuadVector> kernel_basis_ext(const QuadMatrix& m);
std::vector<QuadVector> kernel_basis_ext(const QuadMatrix& m, const QuadFieldPtr& field);

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& s, const RatMatrix& a);
RatVector operator*(const RatMatrix& m, const RatVector& v);
RatMatrix zero_matrix(std::size_t rows, std::size_t cols);
RatMatrix identity_matrix(std::size_t n);
bool is_zero_matrix(const RatMatrix& m);
bool is_skew(const RatMatrix& m);
Rat determinant(RatMatrix m);

/// Rows are inserted one at a time and kept in reduced form against earlier
/// rows, so membership in the running span is one reduction pass.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t width) : width_(width) {}

  /// Adds v if it is independent of the rows held so far.
  bool insert(const RatVector& v);
  bool contains(const RatVector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  RatVector reduce(RatVector v) const;
  std::size_t width_;
  std::vector<std::pair<std::size_t, RatVector>> rows_;  // (pivot, row)
};

}  // namespace pencilaid
