#include "pencilaid/smith.hpp"

#include <algorithm>
#include <optional>

namespace pencilaid {

PolyMatrix poly_identity(std::size_t n) {
  return PolyMatrix::identity(n, Poly(), Poly::constant(Rat(1)));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
  PolyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

class SmithReducer {
 public:
  SmithReducer(const PolyMatrix& m, bool track) : m_(m), track_(track) {
    if (track_) {
      u_ = poly_identity(m.rows());
      v_ = poly_identity(m.cols());
    }
  }

  SmithForm run() {
    const std::size_t steps = std::min(m_.rows(), m_.cols());
    std::vector<Poly> diag(steps);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_at(t)) break;
      const Rat inv = m_(t, t).leading().inverse();
      if (!inv.is_one()) scale_row(t, inv);
      diag[t] = m_(t, t);
    }
    return {std::move(diag), std::move(u_), std::move(v_)};
  }

 private:
  // Least-degree nonzero entry of the trailing submatrix.
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    int best_deg = 0;
    for (std::size_t i = t; i < m_.rows(); ++i)
      for (std::size_t j = t; j < m_.cols(); ++j) {
        const Poly& e = m_(i, j);
        if (e.is_zero()) continue;
        if (!best || e.degree() < best_deg) {
          best = {i, j};
          best_deg = e.degree();
          if (best_deg == 0) return best;
        }
      }
    return best;
  }

  // Brings a pivot dividing every trailing entry to (t, t) with zeros in the
  // rest of its row and column. Returns false when the trailing block is zero.
  bool reduce_at(std::size_t t) {
    for (;;) {
      const auto pivot = find_pivot(t);
      if (!pivot) return false;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool residue = false;
      for (std::size_t i = t + 1; i < m_.rows(); ++i) {
        if (m_(i, t).is_zero()) continue;
        auto [q, r] = divmod(m_(i, t), m_(t, t));
        row_sub_mul(i, t, q);
        if (!r.is_zero()) residue = true;
      }
      for (std::size_t j = t + 1; j < m_.cols(); ++j) {
        if (m_(t, j).is_zero()) continue;
        auto [q, r] = divmod(m_(t, j), m_(t, t));
        col_sub_mul(j, t, q);
        if (!r.is_zero()) residue = true;
      }
      if (residue) continue;

      bool divides_all = true;
      for (std::size_t i = t + 1; i < m_.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < m_.cols(); ++j) {
          if (m_(i, j).is_zero()) continue;
          if (!divmod(m_(i, j), m_(t, t)).second.is_zero()) {
            row_add(t, i);
            divides_all = false;
            break;
          }
        }
      if (divides_all) return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    m_.swap_rows(a, b);
    if (track_) u_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    m_.swap_cols(a, b);
    if (track_) v_.swap_cols(a, b);
  }

  // row_i -= q · row_t
  void row_sub_mul(std::size_t i, std::size_t t, const Poly& q) {
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (!m_(t, j).is_zero()) m_(i, j).sub_mul(q, m_(t, j));
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (!u_(t, j).is_zero()) u_(i, j).sub_mul(q, u_(t, j));
  }

  // col_j -= q · col_t
  void col_sub_mul(std::size_t j, std::size_t t, const Poly& q) {
    for (std::size_t i = 0; i < m_.rows(); ++i)
      if (!m_(i, t).is_zero()) m_(i, j).sub_mul(q, m_(i, t));
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (!v_(i, t).is_zero()) v_(i, j).sub_mul(q, v_(i, t));
  }

  // row_t += row_i
  void row_add(std::size_t t, std::size_t i) {
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (!m_(i, j).is_zero()) m_(t, j) += m_(i, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (!u_(i, j).is_zero()) u_(t, j) += u_(i, j);
  }

  void scale_row(std::size_t t, const Rat& s) {
    for (std::size_t j = 0; j < m_.cols(); ++j) m_(t, j) *= s;
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(t, j) *= s;
  }

  PolyMatrix m_;
  bool track_;
  PolyMatrix u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& m) { return SmithReducer(m, true).run(); }

std::vector<Poly> invariant_polynomials(const PolyMatrix& m) {
  return SmithReducer(m, false).run().diagonal;
}

}  // namespace pencilaid
