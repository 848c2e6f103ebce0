#include "pencilaid/rational.hpp"

#include <cctype>

#include "pencilaid/error.hpp"

namespace pencilaid {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::IrreducibleFactorTooLarge: return "IrreducibleFactorTooLarge";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::PairingViolation: return "PairingViolation";
    case ErrorCode::SizeIdentityViolation: return "SizeIdentityViolation";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::UnrealizableSpec: return "UnrealizableSpec";
    case ErrorCode::GenusTooLow: return "GenusTooLow";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, true))
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  std::string d(den);
  if (d[0] == '+') d.erase(0, 1);
  mpz_class zn(n, 10), zd(d, 10);
  if (zd == 0)
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

void Rat::normalize() {
  if (v_.get_den() == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const { return Rat(1) / *this; }

bool rational_sqrt(const Rat& r, Rat* root) {
  if (r.sign() < 0) return false;
  const mpz_class num = r.numerator(), den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  if (root) {
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    *root = Rat(mpq_class(sn, sd));
  }
  return true;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidInput, "dot: length mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i].value() * b[i].value();
  }
  return Rat(std::move(acc));
}

bool is_zero_vector(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace pencilaid
