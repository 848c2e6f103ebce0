#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pencilaid/pencil.hpp"
#include "pencilaid/smith.hpp"

namespace pencilaid {

/// One PAIR of equal elementary divisors of a skew pencil: μ^e (Infinity),
/// (λ − αμ)^e (Finite), or p(λ, μ)^e for an irreducible quadratic p.
struct ElementaryDivisor {
  enum class Kind { Infinity, Finite, Quadratic };

  Kind kind = Kind::Infinity;
  Rat alpha;     // Finite only
  Poly modulus;  // Quadratic only: monic λ² + uλ + v
  int exponent = 1;

  static ElementaryDivisor infinity(int e);
  static ElementaryDivisor finite(const Rat& alpha, int e);
  static ElementaryDivisor quadratic(const Poly& modulus, int e);

  /// Quadratic with positive discriminant (two irrational real roots).
  bool real_split() const;
  /// Columns this pair occupies in a canonical pencil: 2e or 4e.
  std::size_t block_size() const;

  std::string str() const;

  friend bool operator==(const ElementaryDivisor&, const ElementaryDivisor&) = default;
};

/// Canonical order: Infinity by exponent, Finite by (α, exponent), Quadratic
/// by (modulus coefficients, exponent).
bool divisor_less(const ElementaryDivisor& a, const ElementaryDivisor& b);

struct PencilInvariants {
  std::size_t n = 0;
  std::vector<ElementaryDivisor> pairs;
  std::vector<int> minimal_indices;  // ascending

  /// n = Σ 2e (1 or 2) + Σ (2ε + 1).
  bool size_identity_holds() const;
  std::string str() const;

  friend bool operator==(const PencilInvariants&, const PencilInvariants&) = default;
};

/// Puts pairs and indices in canonical order.
void canonicalize(PencilInvariants& inv);

struct MinimalKernelBasis {
  std::vector<PolyVector> columns;  // (A + λB)·v ≡ 0, degrees ascending
  std::vector<int> degrees;
};

/// Rank of A + λB over Q(λ).
std::size_t generic_rank(const Pencil& p);

/// Prime-power decomposition of nonzero invariant polynomials, returned as pair
/// entries. Throws Error(PairingViolation) if a divisor occurs an odd number
/// of times.
std::vector<ElementaryDivisor> finite_divisors(const Pencil& p);
/// The μ-power divisors, read off the λ'-powers of the reversed pencil.
std::vector<ElementaryDivisor> infinite_divisors(const Pencil& p);

/// Degree-by-degree construction: at degree d the coefficient vectors
/// c_0..c_d solve A c_0 = 0, A c_j + B c_{j−1} = 0, B c_d = 0; solutions not
/// spanned by λ-shifts of earlier columns start new columns.
MinimalKernelBasis minimal_kernel_basis(const Pencil& p);

/// Complete strict-congruence invariant. Throws PairingViolation or
/// SizeIdentityViolation when the computed data is inconsistent.
PencilInvariants invariants(const Pencil& p);

bool strictly_congruent(const Pencil& p, const Pencil& q);

/// Deterministic invertible small-integer matrix for a seed; seed 0 is the
/// identity.
RatMatrix random_invertible(std::size_t n, std::uint64_t seed);
/// (SᵗAS, SᵗBS) for S = random_invertible(n, seed).
Pencil random_congruence(const Pencil& p, std::uint64_t seed);

}  // namespace pencilaid
