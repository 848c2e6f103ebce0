#include "pencilaid/invariants.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace pencilaid {

ElementaryDivisor ElementaryDivisor::infinity(int e) {
  ElementaryDivisor d;
  d.kind = Kind::Infinity;
  d.exponent = e;
  return d;
}

ElementaryDivisor ElementaryDivisor::finite(const Rat& alpha, int e) {
  ElementaryDivisor d;
  d.kind = Kind::Finite;
  d.alpha = alpha;
  d.exponent = e;
  return d;
}

ElementaryDivisor ElementaryDivisor::quadratic(const Poly& modulus, int e) {
  ElementaryDivisor d;
  d.kind = Kind::Quadratic;
  d.modulus = modulus;
  d.exponent = e;
  return d;
}

bool ElementaryDivisor::real_split() const {
  return kind == Kind::Quadratic && quadratic_discriminant(modulus).sign() > 0;
}

std::size_t ElementaryDivisor::block_size() const {
  return static_cast<std::size_t>(exponent) * (kind == Kind::Quadratic ? 4 : 2);
}

std::string ElementaryDivisor::str() const {
  switch (kind) {
    case Kind::Infinity: return "(∞," + std::to_string(exponent) + ")";
    case Kind::Finite: return "(" + alpha.str() + "," + std::to_string(exponent) + ")";
    case Kind::Quadratic: return "(" + modulus.str() + "," + std::to_string(exponent) + ")";
  }
  return "?";
}

bool divisor_less(const ElementaryDivisor& a, const ElementaryDivisor& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  switch (a.kind) {
    case ElementaryDivisor::Kind::Infinity: break;
    case ElementaryDivisor::Kind::Finite:
      if (a.alpha != b.alpha) return a.alpha < b.alpha;
      break;
    case ElementaryDivisor::Kind::Quadratic:
      if (a.modulus != b.modulus) return poly_canonical_less(a.modulus, b.modulus);
      break;
  }
  return a.exponent < b.exponent;
}

bool PencilInvariants::size_identity_holds() const {
  std::size_t total = 0;
  for (const auto& d : pairs) {
    if (d.exponent < 1) return false;
    total += d.block_size();
  }
  for (int e : minimal_indices) {
    if (e < 0) return false;
    total += 2 * static_cast<std::size_t>(e) + 1;
  }
  return total == n;
}

std::string PencilInvariants::str() const {
  std::ostringstream os;
  os << "n=" << n << " pairs=[";
  for (std::size_t i = 0; i < pairs.size(); ++i) os << (i ? " " : "") << pairs[i].str();
  os << "] ε=[";
  for (std::size_t i = 0; i < minimal_indices.size(); ++i)
    os << (i ? "," : "") << minimal_indices[i];
  os << "]";
  return os.str();
}

void canonicalize(PencilInvariants& inv) {
  std::sort(inv.pairs.begin(), inv.pairs.end(), divisor_less);
  std::sort(inv.minimal_indices.begin(), inv.minimal_indices.end());
}

std::size_t generic_rank(const Pencil& p) {
  // The rank of A + tB drops only at roots of the gcd of the maximal minors,
  // of which there are at most n; n + 1 distinct points always include a
  // generic one.
  const std::size_t n = p.size();
  const std::size_t cap = n - n % 2;  // skew matrices have even rank
  std::size_t best = 0;
  for (std::size_t t = 0; t <= n && best < cap; ++t)
    best = std::max(best, rank(p.at(Rat(static_cast<long>(t)))));
  return best;
}

namespace {

std::vector<ElementaryDivisor> pair_up(const std::vector<std::pair<ElementaryDivisor, int>>& counts) {
  std::vector<ElementaryDivisor> out;
  for (const auto& [d, count] : counts) {
    if (count % 2 != 0)
      throw Error(ErrorCode::PairingViolation,
                  "elementary divisor " + d.str() + " has odd multiplicity " + std::to_string(count));
    for (int i = 0; i < count / 2; ++i) out.push_back(d);
  }
  std::sort(out.begin(), out.end(), divisor_less);
  return out;
}

// Local structure at a root θ of P0 + (λ − θ)B. Vectors modulo (λ − θ)^k
// killed by the pencil are chains x_0, …, x_{k−1} with P0 x_0 = 0 and
// P0 x_i + B x_{i−1} = 0; their space has dimension
// Σ_i min(ord_θ d_i, k) + k·(n − r) over the nonzero invariant polynomials
// d_i. The last entries of k-chains form S_k = P0⁻¹(B S_{k−1}), and a
// (k−1)-chain extends exactly when B x_{k−2} ∈ im P0, which gives the
// increments without building the kn × kn system. Returns, for each
// exponent j ≥ 1, the number of d_i with ord_θ d_i = j.
template <class T>
std::map<int, int> local_orders(const Matrix<T>& p0, const Matrix<T>& b, std::size_t r, const T& zero) {
  const std::size_t n = p0.rows();
  const std::size_t r0 = rank(p0);
  const T one = one_like(zero);
  std::vector<std::size_t> at_least{0};  // at_least[k] = #{i : ord ≥ k}, k ≥ 1
  std::vector<std::vector<T>> s;         // basis of S_{k−1}
  for (std::size_t k = 1;; ++k) {
    Matrix<T> m(n, n + s.size(), zero);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = p0(i, j);
      for (std::size_t c = 0; c < s.size(); ++c) {
        T acc = zero;
        for (std::size_t j = 0; j < n; ++j)
          if (!b(i, j).is_zero() && !s[c][j].is_zero()) acc += b(i, j) * s[c][j];
        m(i, n + c) = acc;
      }
    }
    // Chains gain n − r0 new members per step and lose the obstructed ones;
    // n − r of the gain belongs to the singular part.
    const std::size_t obstructed = rank(m) - r0;
    const std::size_t g = (n - r0) - obstructed - (n - r);
    if (g == 0) break;
    if (k > 1 && g > at_least.back()) throw Error(ErrorCode::Internal, "local orders are not monotone");
    at_least.push_back(g);
    if (k > n) throw Error(ErrorCode::Internal, "local order computation did not terminate");
    std::vector<std::vector<T>> rows;
    for (const auto& v : kernel_basis(std::move(m), zero, one)) rows.emplace_back(v.begin(), v.begin() + n);
    Matrix<T> basis(rows.size(), n, zero);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) basis(i, j) = rows[i][j];
    const std::size_t dim = rref_in_place(basis).size();
    s.assign(dim, std::vector<T>(n, zero));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < n; ++j) s[i][j] = basis(i, j);
  }
  std::map<int, int> out;
  for (std::size_t k = 1; k < at_least.size(); ++k) {
    const std::size_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    if (at_least[k] > next) out[static_cast<int>(k)] = static_cast<int>(at_least[k] - next);
  }
  return out;
}

std::size_t local_degree(const std::map<int, int>& orders) {
  std::size_t d = 0;
  for (const auto& [e, count] : orders) d += static_cast<std::size_t>(e) * static_cast<std::size_t>(count);
  return d;
}

RatMatrix random_integer_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(static_cast<long>(gen() % 19) - 9);
  return m;
}

// det(X(A + λB)Y) by Newton interpolation through t = 0..r.
Poly projected_determinant(const Pencil& p, const RatMatrix& x, const RatMatrix& y, std::size_t r) {
  const RatMatrix xa = x * p.a() * y, xb = x * p.b() * y;
  std::vector<Rat> ts, vs;
  for (std::size_t k = 0; k <= r; ++k) {
    ts.emplace_back(static_cast<long>(k));
    vs.push_back(determinant(xa + ts.back() * xb));
  }
  // Divided differences in place.
  std::vector<Rat> c = vs;
  for (std::size_t j = 1; j <= r; ++j)
    for (std::size_t i = r; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (ts[i] - ts[i - j]);
  Poly out = Poly::constant(c[r]);
  for (std::size_t i = r; i-- > 0;) out = out * Poly::linear_root(ts[i]) + Poly::constant(c[i]);
  return out;
}

// A multiple of the product of the nonzero invariant polynomials: the gcd of
// two random r×r projections. Every finite eigenvalue is a root.
Poly eigenvalue_candidates(const Pencil& p, std::size_t r) {
  const std::size_t n = p.size();
  std::mt19937_64 gen(0x5eed);
  Poly g;
  int found = 0;
  for (int attempt = 0; attempt < 16 && found < 2; ++attempt) {
    const RatMatrix x = random_integer_matrix(r, n, gen), y = random_integer_matrix(n, r, gen);
    const Poly d = projected_determinant(p, x, y, r);
    if (d.is_zero()) continue;
    g = poly_gcd(g, d);
    ++found;
  }
  if (found == 0) throw Error(ErrorCode::Internal, "no nondegenerate projection found");
  return g;
}

struct DivisorCounts {
  std::vector<std::pair<ElementaryDivisor, int>> counts;  // individual divisors, not pairs
  std::size_t degree = 0;
};

void add_local(DivisorCounts& out, const std::map<int, int>& orders, auto&& make, std::size_t weight) {
  for (const auto& [e, count] : orders) out.counts.emplace_back(make(e), count);
  out.degree += weight * local_degree(orders);
}

DivisorCounts infinite_counts(const Pencil& p, std::size_t r) {
  DivisorCounts out;
  add_local(out, local_orders(p.b(), p.a(), r, Rat(0)), [](int e) { return ElementaryDivisor::infinity(e); }, 1);
  return out;
}

// Finite divisors; `expected_degree` is their known total degree, used to
// tell a spurious cofactor of the candidate polynomial from a genuine
// irreducible factor of degree ≥ 3.
DivisorCounts finite_counts(const Pencil& p, std::size_t r, std::size_t expected_degree) {
  DivisorCounts out;
  if (r == 0 || expected_degree == 0) return out;
  Poly rest;
  const auto fac = factor_low_degree_partial(eigenvalue_candidates(p, r), rest);
  for (const auto& [f, mult] : fac.factors) {
    if (f.degree() == 1) {
      const Rat alpha = -f[0];
      add_local(out, local_orders(p.at(alpha), p.b(), r, Rat(0)),
                [&](int e) { return ElementaryDivisor::finite(alpha, e); }, 1);
    } else {
      const auto field = QuadField::make(f);
      const QuadExt zero(field);
      QuadMatrix b(p.size(), p.size(), zero);
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) b(i, j) = QuadExt(field, p.b()(i, j));
      add_local(out, local_orders(p.at(QuadExt::theta(field)), b, r, zero),
                [&](int e) { return ElementaryDivisor::quadratic(f, e); }, 2);
    }
  }
  if (out.degree < expected_degree)
    throw Error(ErrorCode::IrreducibleFactorTooLarge,
                "eigenvalue field of degree >= 3 (factor of " + rest.str() + ")");
  if (out.degree > expected_degree) throw Error(ErrorCode::Internal, "finite divisors exceed the pencil degree");
  return out;
}

// T_d maps (c_0, …, c_d) to the coefficients of (A + λB)·Σ c_j λ^j.
RatMatrix toeplitz_system(const Pencil& p, std::size_t d) {
  const std::size_t n = p.size();
  RatMatrix t((d + 2) * n, (d + 1) * n);
  for (std::size_t j = 0; j <= d + 1; ++j) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (j <= d && !p.a()(r, c).is_zero()) t(j * n + r, j * n + c) = p.a()(r, c);
        if (j >= 1 && !p.b()(r, c).is_zero()) t(j * n + r, (j - 1) * n + c) = p.b()(r, c);
      }
  }
  return t;
}

MinimalKernelBasis minimal_kernel_basis_with(const Pencil& p, std::size_t k) {
  const std::size_t n = p.size();
  MinimalKernelBasis out;
  std::vector<RatVector> coeffs;  // stacked c_0..c_ε of each found column
  for (std::size_t d = 0; out.columns.size() < k; ++d) {
    if (d > n)
      throw Error(ErrorCode::Internal, "minimal kernel basis did not terminate");
    const std::size_t width = (d + 1) * n;
    IncrementalSpan span(width);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const std::size_t len = coeffs[i].size();
      for (std::size_t shift = 0; shift * n + len <= width; ++shift) {
        RatVector v(width);
        std::copy(coeffs[i].begin(), coeffs[i].end(), v.begin() + static_cast<long>(shift * n));
        span.insert(v);
      }
    }
    for (auto& v : kernel_basis(toeplitz_system(p, d))) {
      if (out.columns.size() == k) break;
      if (!span.insert(v)) continue;
      PolyVector col(n);
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<Rat> c(d + 1);
        for (std::size_t j = 0; j <= d; ++j) c[j] = v[j * n + r];
        col[r] = Poly(std::move(c));
      }
      if (poly_vector_degree(col) != static_cast<int>(d))
        throw Error(ErrorCode::Internal, "kernel column of unexpected degree");
      coeffs.push_back(std::move(v));
      out.columns.push_back(std::move(col));
      out.degrees.push_back(static_cast<int>(d));
    }
  }
  return out;
}

}  // namespace

namespace {

struct Structure {
  std::size_t rank = 0;
  std::vector<int> minimal_indices;
  DivisorCounts infinite, finite;
};

// Degree count: the nonzero invariant polynomials of A + λB and of B + λA
// together have total degree r − 2Σε, one ε per kernel column and one per
// cokernel row.
Structure structure(const Pencil& p) {
  Structure s;
  s.rank = generic_rank(p);
  s.minimal_indices = minimal_kernel_basis_with(p, p.size() - s.rank).degrees;
  std::size_t eps = 0;
  for (int e : s.minimal_indices) eps += 2 * static_cast<std::size_t>(e);
  if (eps > s.rank) throw Error(ErrorCode::SizeIdentityViolation, "minimal indices exceed the rank");
  s.infinite = infinite_counts(p, s.rank);
  if (s.infinite.degree + eps > s.rank)
    throw Error(ErrorCode::SizeIdentityViolation, "infinite divisors exceed the rank");
  s.finite = finite_counts(p, s.rank, s.rank - eps - s.infinite.degree);
  return s;
}

}  // namespace

std::vector<ElementaryDivisor> finite_divisors(const Pencil& p) { return pair_up(structure(p).finite.counts); }

std::vector<ElementaryDivisor> infinite_divisors(const Pencil& p) {
  return pair_up(infinite_counts(p, generic_rank(p)).counts);
}

MinimalKernelBasis minimal_kernel_basis(const Pencil& p) {
  return minimal_kernel_basis_with(p, p.size() - generic_rank(p));
}

PencilInvariants invariants(const Pencil& p) {
  const Structure s = structure(p);
  PencilInvariants inv;
  inv.n = p.size();
  inv.pairs = pair_up(s.infinite.counts);
  const auto fin = pair_up(s.finite.counts);
  inv.pairs.insert(inv.pairs.end(), fin.begin(), fin.end());
  inv.minimal_indices = s.minimal_indices;
  canonicalize(inv);
  if (!inv.size_identity_holds())
    throw Error(ErrorCode::SizeIdentityViolation,
                "invariants do not account for the pencil size: " + inv.str());
  return inv;
}

bool strictly_congruent(const Pencil& p, const Pencil& q) {
  return p.size() == q.size() && invariants(p) == invariants(q);
}

RatMatrix random_invertible(std::size_t n, std::uint64_t seed) {
  if (seed == 0) return identity_matrix(n);
  std::mt19937_64 gen(seed);
  for (;;) {
    RatMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s(i, j) = Rat(static_cast<long>(gen() % 5) - 2);
    if (!determinant(s).is_zero()) return s;
  }
}

Pencil random_congruence(const Pencil& p, std::uint64_t seed) {
  return p.congruent_by(random_invertible(p.size(), seed));
}

}  // namespace pencilaid
