#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pencilaid/invariants.hpp"
#include "pencilaid/lie_algebra.hpp"

namespace pencilaid {

enum class FieldMode { Real, AlgebraicallyClosed };

const char* field_mode_name(FieldMode mode);  // "real" | "closed"

enum class ConstraintSource {
  PolynomialKernel,
  FiniteEigenvalue,
  QuadraticEigenvalue,
  Infinity,
  Centrality,
};

/// Rows over the 2n unknowns (coefficients of d1, then of d2).
struct ConstraintSystem {
  RatMatrix matrix;
  std::vector<ConstraintSource> sources;  // one per row
};

/// Rational rows equivalent to: (μA + λB)a = 0 ⟹ μ·d1(a) + λ·d2(a) = 0 for all
/// points of the projective line visible in the mode, together with
/// d1 = d2 = 0 on ker A ∩ ker B.
///
/// Sources: the polynomial identity d1(v(λ)) + λ·d2(v(λ)) ≡ 0 for each column
/// of the minimal kernel basis (all generic points); kernels of A + αB at the
/// rational eigenvalues; kernels of A + θB over Q(θ) at quadratic eigenvalues
/// (always when closed, only for real roots in Real mode), expanded into two
/// rational rows each; ker B for the point at infinity.
///
/// Throws Error(IrreducibleFactorTooLarge) when an eigenvalue field has degree
/// three or more.
ConstraintSystem assemble_constraints(const Genus2Algebra& g, FieldMode mode);
ConstraintSystem assemble_constraints(const Pencil& p, FieldMode mode);

struct AidResult {
  FieldMode mode = FieldMode::Real;
  std::size_t dim_inn = 0;
  std::size_t dim_c = 0;
  std::size_t dim_aid = 0;
  DerivationSpace aid_basis;
};

AidResult solve_aid(const Genus2Algebra& g, FieldMode mode);
/// Same computation without the genus check. For pencils whose A and B are
/// dependent the result is still the almost inner derivation space of the
/// algebra with [g, g] ⊆ span(y_1, y_2).
AidResult solve_aid(const Pencil& p, FieldMode mode);

struct FormulaDims {
  std::size_t dim_inn = 0;
  std::size_t dim_aid = 0;
  friend bool operator==(const FormulaDims&, const FormulaDims&) = default;
};

/// Closed-form dimensions from the invariants:
///   aid = inn + Σ_{ε≠0}(ε − 1) + 2Σ(e − 1) + 2Σ(f − 1) [+ 4Σ m over ℝ]
/// where a quadratic pair counts as two finite pairs unless the mode is Real
/// and its roots are non-real. Throws Error(SizeIdentityViolation).
FormulaDims formula_dimension(const PencilInvariants& inv, FieldMode mode);

struct CrossCheckReport {
  FieldMode mode = FieldMode::Real;
  PencilInvariants invariants;
  FormulaDims formula;
  FormulaDims solver;
  bool agree = false;

  std::string str() const;
};

/// Formula against solver for a genus-2 pencil (throws Error(GenusTooLow)).
CrossCheckReport cross_check(const Pencil& p, FieldMode mode);
/// Same without the genus requirement.
CrossCheckReport cross_check_pencil(const Pencil& p, FieldMode mode);

/// dim AID(p ⊕ q) = dim AID(p) + dim AID(q). Throws Error(GenusTooLow) if a
/// summand is the zero pencil or the sum is not genus 2.
bool direct_sum_additivity_check(const Pencil& p, const Pencil& q, FieldMode mode);

// Point-wise criterion: D is almost inner iff L(x)c = d(x) is solvable for
// every x, with L(x) = (xᵗA; xᵗB) and d(x) = (d1(x), d2(x)).

bool pointwise_solvable(const Pencil& p, const CentralDerivation& d,
                        std::span<const Rat> x);
bool pointwise_solvable(const Pencil& p, const CentralDerivation& d,
                        std::span<const QuadExt> x);

/// Kernel vectors at the structured points of the projective line: samples of
/// the minimal kernel basis, rational eigenvalues, λ = 0, infinity, and (per
/// mode) quadratic eigenvalues over Q(θ).
struct WitnessPoints {
  std::vector<RatVector> rational;
  std::vector<QuadVector> extension;
};
WitnessPoints structured_witness_points(const Pencil& p, FieldMode mode,
                                        std::uint64_t seed);

RatVector random_rational_vector(std::size_t n, std::uint64_t seed);

/// True iff every point (rational and extension) admits a solution.
bool certify_at(const Pencil& p, const CentralDerivation& d,
                const WitnessPoints& points);

/// Elements of C(g) extending a basis of span(aid) to a basis of C(g).
DerivationSpace aid_complement(const Pencil& p, const AidResult& aid);

}  // namespace pencilaid
