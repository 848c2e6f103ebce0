#include "pencilaid/polynomial.hpp"

#include <algorithm>
#include <array>

#include "pencilaid/error.hpp"

namespace pencilaid {

namespace {

const Rat kZero{};

}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int degree) {
  if (c.is_zero()) return Poly();
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Rat& root) { return Poly({-root, Rat(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& Poly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const {
  if (c_.empty()) throw Error(ErrorCode::InvalidInput, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  const Rat inv = c_.back().inverse();
  Poly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

Rat Poly::eval(const Rat& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x.value();
    acc += it->value();
  }
  return Rat(std::move(acc));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      acc[i + j] += a.c_[i].value() * b.c_[j].value();
    }
  }
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(std::move(q));
  return Poly(std::move(out));
}

void Poly::sub_mul(const Poly& q, const Poly& b) {
  if (q.is_zero() || b.is_zero()) return;
  const std::size_t need = q.c_.size() + b.c_.size() - 1;
  if (need > c_.size()) c_.resize(need);
  for (std::size_t i = 0; i < q.c_.size(); ++i) {
    if (q.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      c_[i + j] -= q.c_[i] * b.c_[j];
    }
  }
  trim();
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rat mag = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag.is_one();
    if (i == 0 || !unit) out += mag.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "λ";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rat inv_lead = b.leading().inverse();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rat& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const Rat f = top * inv_lead;
    const int shift = k - db;
    quot[static_cast<std::size_t>(shift)] = f;
    for (int j = 0; j <= db; ++j) {
      const Rat& bj = b[j];
      if (!bj.is_zero()) rem[static_cast<std::size_t>(j + shift)] -= f * bj;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly p, Poly q) {
  while (!q.is_zero()) {
    Poly r = divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

bool poly_canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

Rat quadratic_discriminant(const Poly& q) {
  if (q.degree() != 2) throw Error(ErrorCode::InvalidInput, "discriminant of a non-quadratic");
  return q[1] * q[1] - Rat(4) * q[0] * q[2];
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidInput, "square-free decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  const Poly f = p.monic();
  if (f.degree() < 1) return out;
  const Poly fp = f.derivative();
  const Poly a0 = poly_gcd(f, fp);
  Poly b = divmod(f, a0).first;
  Poly c = divmod(fp, a0).first;
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    const Poly a = poly_gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    if (a.degree() >= 1) out.emplace_back(a.monic(), i);
  }
  return out;
}

namespace {

// Integer helpers for the rational-root and quadratic-factor searches. The
// searches are exhaustive over divisors, which is fine for the small
// coefficients that pencil invariants produce.

/// Primitive integer multiple of p with positive leading coefficient.
std::vector<mpz_class> primitive_integer(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    const mpz_class d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> z;
  z.reserve(p.coeffs().size());
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpq_class scaled = c.value() * l;
    z.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (z.back() < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

constexpr unsigned long kTrialLimit = 2000000;

/// Positive divisors of |n| (n ≠ 0).
std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> primes;
  for (unsigned long p = 2; p <= kTrialLimit && mpz_class(p) * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e) primes.emplace_back(mpz_class(p), e);
  }
  if (n > 1) {
    if (mpz_class(kTrialLimit) * kTrialLimit < n &&
        mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw Error(ErrorCode::Unsupported,
                  "polynomial coefficients too large for the factor search");
    primes.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

mpz_class eval_int(const std::vector<mpz_class>& z, long t) {
  mpz_class acc = 0;
  for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * t + *it;
  return acc;
}

/// Rational roots of a square-free polynomial.
std::vector<Rat> rational_roots(const Poly& f) {
  std::vector<Rat> roots;
  if (f.degree() < 1) return roots;
  Poly g = f;
  if (g[0].is_zero()) {
    roots.emplace_back(0);
    g = divmod(g, Poly::linear_root(Rat(0))).first;
  }
  if (g.degree() < 1) return roots;
  const auto z = primitive_integer(g);
  const auto ps = positive_divisors(z.front());
  const auto qs = positive_divisors(z.back());
  for (const auto& q : qs) {
    for (const auto& p : ps) {
      mpz_class common;
      mpz_gcd(common.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (common != 1) continue;
      for (int s : {1, -1}) {
        const Rat cand(mpq_class(p * s, q));
        if (g.eval(cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Kronecker search for one quadratic factor of a primitive integer polynomial
/// of degree ≥ 3 with no rational roots. Returns the zero polynomial if
/// none exists.
Poly find_quadratic_factor(const Poly& f) {
  const auto z = primitive_integer(f);
  // Three evaluation points with the smallest values keep the divisor lists short.
  std::vector<std::pair<mpz_class, long>> values;
  for (long t : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) {
    mpz_class v = eval_int(z, t);
    values.emplace_back(v < 0 ? mpz_class(-v) : v, t);
  }
  std::stable_sort(values.begin(), values.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::array<long, 3> ts{};
  std::array<std::vector<mpz_class>, 3> divs;
  for (int i = 0; i < 3; ++i) {
    ts[i] = values[i].second;
    divs[i] = positive_divisors(values[i].first);
  }
  const long check_t = values[3].second;
  const mpz_class check_v = values[3].first;
  const mpz_class lead = z.back();

  // Lagrange interpolation through (t_i, v_i).
  const Rat t0(ts[0]), t1(ts[1]), t2(ts[2]);
  const Rat w0 = ((t0 - t1) * (t0 - t2)).inverse();
  const Rat w1 = ((t1 - t0) * (t1 - t2)).inverse();
  const Rat w2 = ((t2 - t0) * (t2 - t1)).inverse();
  const Poly l0 = Poly({t1 * t2, -(t1 + t2), Rat(1)}) * w0;
  const Poly l1 = Poly({t0 * t2, -(t0 + t2), Rat(1)}) * w1;
  const Poly l2 = Poly({t0 * t1, -(t0 + t1), Rat(1)}) * w2;

  for (const auto& d0 : divs[0]) {
    const Poly p0 = l0 * Rat(mpq_class(d0));
    for (const auto& d1abs : divs[1]) {
      for (int s1 : {1, -1}) {
        const Poly p01 = p0 + l1 * Rat(mpq_class(d1abs * s1));
        for (const auto& d2abs : divs[2]) {
          for (int s2 : {1, -1}) {
            const Poly g = p01 + l2 * Rat(mpq_class(d2abs * s2));
            if (g.degree() != 2) continue;
            if (!g[0].is_integer() || !g[1].is_integer() || !g[2].is_integer()) continue;
            const mpz_class g2 = g[2].numerator();
            if (!mpz_divisible_p(lead.get_mpz_t(), g2.get_mpz_t())) continue;
            const Rat gv = g.eval(Rat(check_t));
            if (gv.is_zero()) continue;
            const mpz_class gvz = gv.numerator();
            if (!mpz_divisible_p(check_v.get_mpz_t(), gvz.get_mpz_t())) continue;
            if (divmod(f, g).second.is_zero()) return g.monic();
          }
        }
      }
    }
  }
  return Poly();
}

/// Irreducible factors of a square-free polynomial, each of degree ≤ 2. With
/// `rest` set, a cofactor free of such factors is returned there; otherwise it
/// raises IrreducibleFactorTooLarge.
std::vector<Poly> split_squarefree(const Poly& f, Poly* rest_out) {
  std::vector<Poly> out;
  Poly rest = f.monic();
  for (const auto& r : rational_roots(rest)) {
    const Poly lin = Poly::linear_root(r);
    rest = divmod(rest, lin).first;
    out.push_back(lin);
  }
  while (rest.degree() >= 1) {
    if (rest.degree() == 2) {
      out.push_back(rest.monic());
      rest = Poly::constant(Rat(1));
      break;
    }
    const Poly q = (rest_out || rest.degree() % 2 == 0) ? find_quadratic_factor(rest) : Poly();
    if (q.is_zero()) break;
    out.push_back(q);
    rest = divmod(rest, q).first.monic();
  }
  if (rest.degree() >= 1) {
    if (!rest_out)
      throw Error(ErrorCode::IrreducibleFactorTooLarge,
                  "irreducible factor of degree >= 3 in " + f.str());
    *rest_out = rest;
  }
  return out;
}

Factorization factor_impl(const Poly& p, Poly* rest) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidInput, "factorization of the zero polynomial");
  Factorization out{p.leading(), {}};
  if (rest) *rest = Poly::constant(Rat(1));
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    Poly r = Poly::constant(Rat(1));
    for (auto& f : split_squarefree(part, rest ? &r : nullptr)) out.factors.emplace_back(std::move(f), mult);
    if (rest)
      for (int i = 0; i < mult; ++i) *rest = *rest * r;
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return poly_canonical_less(a.first, b.first);
  });
  return out;
}

}  // namespace

Factorization factor_low_degree(const Poly& p) { return factor_impl(p, nullptr); }

Factorization factor_low_degree_partial(const Poly& p, Poly& rest) { return factor_impl(p, &rest); }

}  // namespace pencilaid
