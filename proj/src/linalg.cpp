#include "pencilaid/matrix.hpp"

namespace pencilaid {

std::vector<QuadVector> kernel_basis_ext(const QuadMatrix& m, const QuadFieldPtr& field) {
  for (const auto& x : m.data())
    if (!same_field(*x.field(), *field))
      throw Error(ErrorCode::ModulusMismatch, "matrix entries use different moduli");
  return kernel_basis(m, QuadExt(field), QuadExt(field, Rat(1)));
}

std::vector<QuadVector> kernel_basis_ext(const QuadMatrix& m) {
  if (m.empty())
    throw Error(ErrorCode::InvalidInput, "kernel_basis_ext needs at least one entry");
  return kernel_basis_ext(m, m.data().front().field());
}

RatMatrix zero_matrix(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

RatMatrix identity_matrix(std::size_t n) {
  return RatMatrix::identity(n, Rat(0), Rat(1));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::InvalidInput, "matrix sum shape mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

RatMatrix operator*(const Rat& s, const RatMatrix& a) {
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::InvalidInput, "matrix-vector shape mismatch");
  RatVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

bool is_zero_matrix(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (!x.is_zero()) return false;
  return true;
}

bool is_skew(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (!(m(i, j) == -m(j, i))) return false;
  return true;
}

// Fraction-free (Bareiss) elimination on the matrix with row denominators
// cleared; every intermediate entry is a minor of the integer matrix.
Rat determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidInput, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  std::vector<std::vector<mpz_class>> z(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).value().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) z[i][j] = m(i, j).value().get_num() * (l / m(i, j).value().get_den());
    scale *= l;
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t p = c;
    while (p < n && z[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(z[p], z[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        z[i][j] = z[i][j] * z[c][c] - z[i][c] * z[c][j];
        mpz_divexact(z[i][j].get_mpz_t(), z[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[c][c];
  }
  return Rat(mpq_class(sign * z[n - 1][n - 1], scale));
}

RatVector IncrementalSpan::reduce(RatVector v) const {
  for (const auto& [pivot, row] : rows_) {
    if (v[pivot].is_zero()) continue;
    const Rat f = v[pivot];
    for (std::size_t j = 0; j < width_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool IncrementalSpan::insert(const RatVector& v) {
  if (v.size() != width_) throw Error(ErrorCode::InvalidInput, "IncrementalSpan width mismatch");
  RatVector r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < width_ && r[pivot].is_zero()) ++pivot;
  if (pivot == width_) return false;
  const Rat inv = r[pivot].inverse();
  for (auto& x : r) x *= inv;
  rows_.emplace_back(pivot, std::move(r));
  return true;
}

bool IncrementalSpan::contains(const RatVector& v) const {
  if (v.size() != width_) throw Error(ErrorCode::InvalidInput, "IncrementalSpan width mismatch");
  return is_zero_vector(reduce(v));
}

}  // namespace pencilaid
