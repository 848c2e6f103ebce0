#pragma once

#include <vector>

#include "pencilaid/matrix.hpp"

namespace pencilaid {

struct SmithForm {
  /// min(rows, cols) entries; monic or zero, each dividing the next, zeros last.
  std::vector<Poly> diagonal;
  PolyMatrix u;  // rows × rows, unimodular
  PolyMatrix v;  // cols × cols, unimodular
};

/// Smith normal form over Q[λ] with U·m·V = diag(diagonal). Pivots are the
/// nonzero entries of least degree (ties: lowest row, then column).
SmithForm smith_normal_form(const PolyMatrix& m);

/// Only the diagonal; skips building U and V.
std::vector<Poly> invariant_polynomials(const PolyMatrix& m);

PolyMatrix poly_identity(std::size_t n);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace pencilaid
