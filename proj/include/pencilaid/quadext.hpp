#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pencilaid/polynomial.hpp"

namespace pencilaid {

/// The field Q(θ) = Q[λ]/(λ² + uλ + v) for an irreducible monic quadratic.
class QuadField {
 public:
  /// Throws Error(InvalidInput) unless modulus is monic, degree 2, and has no
  /// rational root.
  static std::shared_ptr<const QuadField> make(const Poly& modulus);

  const Poly& modulus() const { return modulus_; }
  const Rat& u() const { return u_; }
  const Rat& v() const { return v_; }
  /// Positive discriminant: both conjugate roots are real.
  bool real_roots() const { return quadratic_discriminant(modulus_).sign() > 0; }

 private:
  explicit QuadField(Poly modulus);
  Poly modulus_;
  Rat u_, v_;
};

using QuadFieldPtr = std::shared_ptr<const QuadField>;

/// Element c0 + c1·θ of a quadratic extension field.
class QuadExt {
 public:
  QuadExt(QuadFieldPtr field, Rat c0 = Rat(0), Rat c1 = Rat(0));

  static QuadExt theta(const QuadFieldPtr& field) {
    return QuadExt(field, Rat(0), Rat(1));
  }

  const QuadFieldPtr& field() const { return field_; }
  const Rat& c0() const { return c0_; }
  const Rat& c1() const { return c1_; }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  QuadExt operator-() const { return QuadExt(field_, -c0_, -c1_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  /// Norm c0² − u·c0·c1 + v·c1²; zero only for the zero element.
  Rat norm() const;
  QuadExt inverse() const;

  friend bool operator==(const QuadExt& a, const QuadExt& b);

  std::string str() const;

 private:
  void check_same_field(const QuadExt& o) const;
  QuadFieldPtr field_;
  Rat c0_, c1_;
};

inline QuadExt one_like(const QuadExt& x) { return QuadExt(x.field(), Rat(1)); }

bool same_field(const QuadField& a, const QuadField& b);

using QuadVector = std::vector<QuadExt>;

}  // namespace pencilaid
