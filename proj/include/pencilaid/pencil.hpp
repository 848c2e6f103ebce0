#pragma once

#include <cstddef>

#include "pencilaid/matrix.hpp"

namespace pencilaid {

using PolyVector = std::vector<Poly>;

/// Skew-symmetric pencil μA + λB over Q.
class Pencil {
 public:
  /// Throws Error(InvalidInput) unless A and B are square, of equal size, and
  /// skew-symmetric.
  Pencil(RatMatrix a, RatMatrix b);

  std::size_t size() const { return a_.rows(); }
  const RatMatrix& a() const { return a_; }
  const RatMatrix& b() const { return b_; }

  /// A + tB.
  RatMatrix at(const Rat& t) const;
  /// A + θB over the quadratic field.
  QuadMatrix at(const QuadExt& theta) const;
  /// A + λB as a polynomial matrix.
  PolyMatrix poly_matrix() const;
  /// The reversed pencil B + λ'A.
  PolyMatrix reversed_poly_matrix() const;
  /// A and B stacked into a 2n×n matrix; its kernel is ker A ∩ ker B.
  RatMatrix stacked() const;

  /// (aA + bB, cA + dB): a change of basis in the span of the two matrices.
  Pencil mixed(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;
  /// (SᵗAS, SᵗBS).
  Pencil congruent_by(const RatMatrix& s) const;

  friend bool operator==(const Pencil&, const Pencil&) = default;

 private:
  RatMatrix a_, b_;
};

PolyVector poly_mat_vec(const PolyMatrix& m, const PolyVector& v);
RatVector eval_poly_vector(const PolyVector& v, const Rat& t);
int poly_vector_degree(const PolyVector& v);

}  // namespace pencilaid
