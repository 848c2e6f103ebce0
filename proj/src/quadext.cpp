#include "pencilaid/quadext.hpp"

#include "pencilaid/error.hpp"

namespace pencilaid {

std::shared_ptr<const QuadField> QuadField::make(const Poly& modulus) {
  if (modulus.degree() != 2 || !modulus.is_monic())
    throw Error(ErrorCode::InvalidInput, "quadratic modulus must be monic of degree 2");
  if (rational_sqrt(quadratic_discriminant(modulus), nullptr))
    throw Error(ErrorCode::InvalidInput, "quadratic modulus " + modulus.str() +
                                             " is reducible over Q");
  return std::shared_ptr<const QuadField>(new QuadField(modulus));
}

QuadField::QuadField(Poly modulus)
    : modulus_(std::move(modulus)), u_(modulus_[1]), v_(modulus_[0]) {}

bool same_field(const QuadField& a, const QuadField& b) {
  return &a == &b || a.modulus() == b.modulus();
}

QuadExt::QuadExt(QuadFieldPtr field, Rat c0, Rat c1)
    : field_(std::move(field)), c0_(std::move(c0)), c1_(std::move(c1)) {
  if (!field_) throw Error(ErrorCode::InvalidInput, "QuadExt without a field");
}

void QuadExt::check_same_field(const QuadExt& o) const {
  if (!same_field(*field_, *o.field_))
    throw Error(ErrorCode::ModulusMismatch, "quadratic extension moduli differ: " +
                                                field_->modulus().str() + " vs " +
                                                o.field_->modulus().str());
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  check_same_field(o);
  c0_ += o.c0_;
  c1_ += o.c1_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  check_same_field(o);
  c0_ -= o.c0_;
  c1_ -= o.c1_;
  return *this;
}

// (c0 + c1θ)(d0 + d1θ) with θ² = −uθ − v.
QuadExt& QuadExt::operator*=(const QuadExt& o) {
  check_same_field(o);
  const Rat t = c1_ * o.c1_;
  const Rat n0 = c0_ * o.c0_ - field_->v() * t;
  const Rat n1 = c0_ * o.c1_ + c1_ * o.c0_ - field_->u() * t;
  c0_ = n0;
  c1_ = n1;
  return *this;
}

Rat QuadExt::norm() const {
  return c0_ * c0_ - field_->u() * c0_ * c1_ + field_->v() * c1_ * c1_;
}

// The conjugate of θ is −u − θ, so (c0 + c1θ)⁻¹ = (c0 − u·c1 − c1θ) / norm.
QuadExt QuadExt::inverse() const {
  const Rat n = norm();
  if (n.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero in Q(θ)");
  const Rat inv = n.inverse();
  return QuadExt(field_, (c0_ - field_->u() * c1_) * inv, -c1_ * inv);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  return same_field(*a.field_, *b.field_) && a.c0_ == b.c0_ && a.c1_ == b.c1_;
}

std::string QuadExt::str() const {
  if (c1_.is_zero()) return c0_.str();
  std::string s = c0_.is_zero() ? "" : c0_.str() + " + ";
  return s + "(" + c1_.str() + ")θ";
}

}  // namespace pencilaid
