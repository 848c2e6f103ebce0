#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pencilaid/rational.hpp"

namespace pencilaid {

/// Univariate polynomial over Q in the pencil variable λ, lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int degree);
  /// The polynomial λ − root.
  static Poly linear_root(const Rat& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  /// Coefficient of λ^i; zero outside the stored range.
  const Rat& operator[](int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  Poly monic() const;
  Rat eval(const Rat& x) const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

  /// a -= q * b without building the product.
  void sub_mul(const Poly& q, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Human-readable form in λ, e.g. "λ^2 + 1".
  std::string str() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; throws Error(InvalidInput) when the divisor is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly p, Poly q);

/// Canonical order: degree first, then coefficients from the constant term up.
bool poly_canonical_less(const Poly& a, const Poly& b);

/// Discriminant u² − 4v of a monic quadratic λ² + uλ + v.
Rat quadratic_discriminant(const Poly& monic_quadratic);

struct Factorization {
  Rat unit;  // leading coefficient of the input
  std::vector<std::pair<Poly, int>> factors;
};

/// Factors p into monic irreducibles of degree 1 or 2 (canonically ordered).
/// Throws Error(IrreducibleFactorTooLarge) if p has an irreducible factor of
/// degree ≥ 3 over Q, Error(InvalidInput) if p is zero.
Factorization factor_low_degree(const Poly& p);

/// The degree ≤ 2 part of the factorization; the monic product of the
/// remaining irreducible factors (1 if none) is stored in rest.
Factorization factor_low_degree_partial(const Poly& p, Poly& rest);

/// Square-free decomposition of a nonzero polynomial (Yun): pairs
/// (square-free monic part, multiplicity) with non-constant parts only.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

}  // namespace pencilaid
