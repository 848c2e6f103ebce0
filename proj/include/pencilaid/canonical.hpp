#pragma once

#include <span>
#include <string>
#include <vector>

#include "pencilaid/invariants.hpp"

namespace pencilaid {

/// One canonical block. Inf, Finite, Complex and MinIdx are the four classical
/// skew blocks; Quadratic is the rational companion block for an irreducible
/// quadratic p, [[0, λI − μC], [−(λI − μC)ᵗ, 0]] with C the companion of p^m.
struct BlockSpec {
  enum class Kind { Inf, Finite, Complex, MinIdx, Quadratic };

  Kind kind = Kind::MinIdx;
  int exponent = 0;  // e, f, m or ε
  Rat alpha;         // Finite
  Rat a, b;          // Complex: eigenvalue a + bi
  Poly modulus;      // Quadratic

  static BlockSpec inf(int e);
  static BlockSpec finite(const Rat& alpha, int f);
  static BlockSpec complex(const Rat& a, const Rat& b, int m);
  static BlockSpec min_index(int eps);
  static BlockSpec quadratic(const Poly& modulus, int m);

  std::size_t size() const;
  /// The pair this block carries, or none for MinIdx.
  PencilInvariants invariants() const;
  std::string str() const;
};

struct CanonicalSpec {
  std::vector<BlockSpec> blocks;
};

/// Throws Error(InvalidSpec) on out-of-range parameters.
Pencil build_block(const BlockSpec& spec);
/// Block-diagonal sum; throws Error(InvalidInput) on an empty list.
Pencil direct_sum(std::span<const Pencil> pencils);
Pencil direct_sum(const Pencil& p, const Pencil& q);
/// Direct sum of the blocks, in the given order.
Pencil build_canonical(const CanonicalSpec& spec);
/// Invariants a canonical spec is expected to produce.
PencilInvariants expected_invariants(const CanonicalSpec& spec);

/// Blocks in the order infinite, finite, complex/quadratic, minimal indices.
/// Quadratic pairs with a rational b = sqrt(v − u²/4) become C(a, b, m) with
/// b > 0; otherwise the companion block is used. Throws
/// Error(UnrealizableSpec) when the size identity fails or there is nothing
/// to build.
CanonicalSpec canonical_spec_from_invariants(const PencilInvariants& inv);
Pencil canonical_from_invariants(const PencilInvariants& inv);

}  // namespace pencilaid
