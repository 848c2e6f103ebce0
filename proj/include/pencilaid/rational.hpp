#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pencilaid {

/// Exact rational number in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;

  template <std::integral I>
  Rat(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I, std::integral J>
  Rat(I num, J den) : v_(static_cast<long>(num), static_cast<long>(den)) {
    normalize();
  }

  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Throws Error(Parse) on malformed input or q = 0.
  static Rat parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_), raw_tag{}); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  /// Multiplicative inverse; throws on zero.
  Rat inverse() const;
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  struct raw_tag {};
  Rat(mpq_class v, raw_tag) : v_(std::move(v)) {}
  void normalize();

  mpq_class v_;
};

/// True when r is the square of a rational; stores the non-negative root.
bool rational_sqrt(const Rat& r, Rat* root);

inline Rat one_like(const Rat&) { return Rat(1); }

using RatVector = std::vector<Rat>;

Rat dot(const RatVector& a, const RatVector& b);
bool is_zero_vector(const RatVector& v);

}  // namespace pencilaid
