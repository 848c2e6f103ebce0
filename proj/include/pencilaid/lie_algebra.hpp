#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pencilaid/pencil.hpp"

namespace pencilaid {

/// Element x + y with x in span(x_1..x_n) and y in span(y_1, y_2).
struct Element {
  RatVector x;
  std::array<Rat, 2> y;

  static Element basis_x(std::size_t n, std::size_t i);
  friend bool operator==(const Element&, const Element&) = default;
};

/// D(x) = d1(x)·y_1 + d2(x)·y_2, D(y) = 0.
struct CentralDerivation {
  RatVector d1, d2;

  /// (d1 | d2) as one 2n-vector.
  RatVector coordinates() const;
  static CentralDerivation from_coordinates(const RatVector& c);
  friend bool operator==(const CentralDerivation&, const CentralDerivation&) = default;
};

struct DerivationSpace {
  std::vector<CentralDerivation> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Two-step nilpotent algebra with [x_i, x_j] = a_ij·y_1 + b_ij·y_2 and
/// dim [g, g] = 2.
class Genus2Algebra {
 public:
  /// Throws Error(GenusTooLow) when A and B are linearly dependent.
  explicit Genus2Algebra(Pencil pencil);

  std::size_t n() const { return pencil_.size(); }
  std::size_t dim() const { return pencil_.size() + 2; }
  const Pencil& pencil() const { return pencil_; }

 private:
  Pencil pencil_;
};

Genus2Algebra algebra_from_pencil(const Pencil& p);

/// dim span(A, B) = dim [g, g] of the pencil's algebra.
std::size_t commutator_dimension(const Pencil& p);

Element bracket(const Genus2Algebra& g, const Element& u, const Element& v);

/// Z(g) = span(y_1, y_2) ⊕ (ker A ∩ ker B); only the x-part is returned.
struct Center {
  std::vector<RatVector> x_basis;
};
Center center(const Genus2Algebra& g);
Center center(const Pencil& p);

/// n − dim(ker A ∩ ker B).
std::size_t inner_dimension(const Genus2Algebra& g);
std::size_t inner_dimension(const Pencil& p);

/// Pairs (d1, d2) vanishing on the central x-directions; dimension
/// 2·inner_dimension.
DerivationSpace central_derivations(const Genus2Algebra& g);
DerivationSpace central_derivations(const Pencil& p);

/// An independent subset of ad(x_1), …, ad(x_n); ad(x_i) = (row i of A, row i
/// of B).
DerivationSpace inner_basis(const Genus2Algebra& g);
DerivationSpace inner_basis(const Pencil& p);

/// Stacks derivation coordinates as rows of a dim × 2n matrix.
RatMatrix coordinate_matrix(const DerivationSpace& s, std::size_t n);

/// span(a) ⊆ span(b) for coordinate vectors.
bool span_contains(const DerivationSpace& outer, const DerivationSpace& inner,
                   std::size_t n);

}  // namespace pencilaid
