#include "pencilaid/pencil.hpp"

namespace pencilaid {

Pencil::Pencil(RatMatrix a, RatMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != a_.cols() || b_.rows() != b_.cols() || a_.rows() != b_.rows())
    throw Error(ErrorCode::InvalidInput, "pencil matrices must be square of equal size");
  if (a_.rows() == 0) throw Error(ErrorCode::InvalidInput, "pencil of size 0");
  if (!is_skew(a_)) throw Error(ErrorCode::InvalidInput, "matrix A is not skew-symmetric");
  if (!is_skew(b_)) throw Error(ErrorCode::InvalidInput, "matrix B is not skew-symmetric");
}

RatMatrix Pencil::at(const Rat& t) const {
  RatMatrix m = a_;
  if (t.is_zero()) return m;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (!b_(i, j).is_zero()) m(i, j) += t * b_(i, j);
  return m;
}

QuadMatrix Pencil::at(const QuadExt& theta) const {
  const std::size_t n = size();
  QuadMatrix m(n, n, QuadExt(theta.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = QuadExt(theta.field(), a_(i, j)) + QuadExt(theta.field(), b_(i, j)) * theta;
  return m;
}

PolyMatrix Pencil::poly_matrix() const {
  const std::size_t n = size();
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Poly({a_(i, j), b_(i, j)});
  return m;
}

PolyMatrix Pencil::reversed_poly_matrix() const {
  const std::size_t n = size();
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Poly({b_(i, j), a_(i, j)});
  return m;
}

RatMatrix Pencil::stacked() const {
  const std::size_t n = size();
  RatMatrix s(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s(i, j) = a_(i, j);
      s(n + i, j) = b_(i, j);
    }
  return s;
}

Pencil Pencil::mixed(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
  if ((a * d - b * c).is_zero())
    throw Error(ErrorCode::InvalidInput, "pencil mixing matrix is singular");
  return Pencil(a * a_ + b * b_, c * a_ + d * b_);
}

Pencil Pencil::congruent_by(const RatMatrix& s) const {
  if (s.rows() != size() || s.cols() != size())
    throw Error(ErrorCode::InvalidInput, "congruence matrix has the wrong size");
  const RatMatrix st = s.transposed();
  return Pencil(st * a_ * s, st * b_ * s);
}

PolyVector poly_mat_vec(const PolyMatrix& m, const PolyVector& v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::InvalidInput, "shape mismatch");
  PolyVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

RatVector eval_poly_vector(const PolyVector& v, const Rat& t) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.eval(t));
  return out;
}

int poly_vector_degree(const PolyVector& v) {
  int d = -1;
  for (const auto& p : v) d = std::max(d, p.degree());
  return d;
}

}  // namespace pencilaid
