#include "pencilaid/canonical.hpp"

#include <sstream>

namespace pencilaid {

BlockSpec BlockSpec::inf(int e) {
  BlockSpec s;
  s.kind = Kind::Inf;
  s.exponent = e;
  return s;
}

BlockSpec BlockSpec::finite(const Rat& alpha, int f) {
  BlockSpec s;
  s.kind = Kind::Finite;
  s.alpha = alpha;
  s.exponent = f;
  return s;
}

BlockSpec BlockSpec::complex(const Rat& a, const Rat& b, int m) {
  BlockSpec s;
  s.kind = Kind::Complex;
  s.a = a;
  s.b = b;
  s.exponent = m;
  return s;
}

BlockSpec BlockSpec::min_index(int eps) {
  BlockSpec s;
  s.kind = Kind::MinIdx;
  s.exponent = eps;
  return s;
}

BlockSpec BlockSpec::quadratic(const Poly& modulus, int m) {
  BlockSpec s;
  s.kind = Kind::Quadratic;
  s.modulus = modulus;
  s.exponent = m;
  return s;
}

std::size_t BlockSpec::size() const {
  const auto k = static_cast<std::size_t>(exponent);
  switch (kind) {
    case Kind::Inf:
    case Kind::Finite: return 2 * k;
    case Kind::Complex:
    case Kind::Quadratic: return 4 * k;
    case Kind::MinIdx: return 2 * k + 1;
  }
  return 0;
}

PencilInvariants BlockSpec::invariants() const {
  PencilInvariants inv;
  inv.n = size();
  switch (kind) {
    case Kind::Inf: inv.pairs.push_back(ElementaryDivisor::infinity(exponent)); break;
    case Kind::Finite: inv.pairs.push_back(ElementaryDivisor::finite(alpha, exponent)); break;
    case Kind::Complex:
      inv.pairs.push_back(ElementaryDivisor::quadratic(
          Poly({a * a + b * b, Rat(-2) * a, Rat(1)}), exponent));
      break;
    case Kind::Quadratic: inv.pairs.push_back(ElementaryDivisor::quadratic(modulus, exponent)); break;
    case Kind::MinIdx: inv.minimal_indices.push_back(exponent); break;
  }
  return inv;
}

std::string BlockSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Inf: os << "F(∞," << exponent << ")"; break;
    case Kind::Finite: os << "F(" << alpha << "," << exponent << ")"; break;
    case Kind::Complex: os << "C(" << a << "," << b << "," << exponent << ")"; break;
    case Kind::MinIdx: os << "M" << exponent; break;
    case Kind::Quadratic: os << "Q(" << modulus.str() << "," << exponent << ")"; break;
  }
  return os.str();
}

namespace {

// Skew pencil [[0, M], [−Mᵗ, 0]] from the A- and B-parts of M.
Pencil off_diagonal(const RatMatrix& ma, const RatMatrix& mb) {
  const std::size_t r = ma.rows(), c = ma.cols();
  const std::size_t n = r + c;
  RatMatrix a(n, n), b(n, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      a(i, r + j) = ma(i, j);
      a(r + j, i) = -ma(i, j);
      b(i, r + j) = mb(i, j);
      b(r + j, i) = -mb(i, j);
    }
  return Pencil(std::move(a), std::move(b));
}

// Anti-diagonal of ones shifted by `offset` (0 gives Δ, 1 gives Λ).
RatMatrix anti_diagonal(std::size_t e, std::size_t offset) {
  RatMatrix m(e, e);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j)
      if (i + j == e - 1 + offset) m(i, j) = Rat(1);
  return m;
}

void require(bool ok, const BlockSpec& s, const char* why) {
  if (!ok) throw Error(ErrorCode::InvalidSpec, "invalid block " + s.str() + ": " + why);
}

}  // namespace

Pencil build_block(const BlockSpec& s) {
  const auto k = static_cast<std::size_t>(s.exponent > 0 ? s.exponent : 0);
  switch (s.kind) {
    case BlockSpec::Kind::Inf: {
      require(s.exponent >= 1, s, "e must be at least 1");
      return off_diagonal(anti_diagonal(k, 0), anti_diagonal(k, 1));
    }
    case BlockSpec::Kind::Finite: {
      require(s.exponent >= 1, s, "f must be at least 1");
      const RatMatrix delta = anti_diagonal(k, 0);
      return off_diagonal((-s.alpha) * delta + anti_diagonal(k, 1), delta);
    }
    case BlockSpec::Kind::Complex: {
      require(s.exponent >= 1, s, "m must be at least 1");
      require(!s.b.is_zero(), s, "b must be nonzero");
      const std::size_t w = 2 * k;
      RatMatrix ta(w, w), tb(w, w);
      for (std::size_t bi = 0; bi < k; ++bi)
        for (std::size_t bj = 0; bj < k; ++bj) {
          const std::size_t r = 2 * bi, c = 2 * bj;
          if (bi + bj == k - 1) {
            // R = (−μb, λ − μa; λ − μa, μb)
            ta(r, c) = -s.b;
            ta(r, c + 1) = -s.a;
            ta(r + 1, c) = -s.a;
            ta(r + 1, c + 1) = s.b;
            tb(r, c + 1) = Rat(1);
            tb(r + 1, c) = Rat(1);
          } else if (bi + bj == k) {
            // μΔ₂
            ta(r, c + 1) = Rat(1);
            ta(r + 1, c) = Rat(1);
          }
        }
      return off_diagonal(ta, tb);
    }
    case BlockSpec::Kind::MinIdx: {
      require(s.exponent >= 0, s, "ε must be non-negative");
      if (k == 0) return Pencil(RatMatrix(1, 1), RatMatrix(1, 1));
      // L_ε: λ on the diagonal, μ just below.
      RatMatrix la(k + 1, k), lb(k + 1, k);
      for (std::size_t i = 0; i < k; ++i) {
        lb(i, i) = Rat(1);
        la(i + 1, i) = Rat(1);
      }
      return off_diagonal(la, lb);
    }
    case BlockSpec::Kind::Quadratic: {
      require(s.exponent >= 1, s, "m must be at least 1");
      require(s.modulus.degree() == 2 && s.modulus.is_monic(), s, "modulus must be monic quadratic");
      require(!rational_sqrt(quadratic_discriminant(s.modulus), nullptr), s,
              "modulus must be irreducible over Q");
      Poly q = Poly::constant(Rat(1));
      for (std::size_t i = 0; i < k; ++i) q = q * s.modulus;
      // λI − μC with C the companion matrix of q.
      const std::size_t w = 2 * k;
      RatMatrix ma(w, w), mb = identity_matrix(w);
      for (std::size_t i = 1; i < w; ++i) ma(i, i - 1) = Rat(-1);
      for (std::size_t i = 0; i < w; ++i) ma(i, w - 1) = q[static_cast<int>(i)];
      return off_diagonal(ma, mb);
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown block kind");
}

Pencil direct_sum(std::span<const Pencil> pencils) {
  if (pencils.empty()) throw Error(ErrorCode::InvalidInput, "direct sum of no pencils");
  std::size_t n = 0;
  for (const auto& p : pencils) n += p.size();
  RatMatrix a(n, n), b(n, n);
  std::size_t off = 0;
  for (const auto& p : pencils) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) {
        a(off + i, off + j) = p.a()(i, j);
        b(off + i, off + j) = p.b()(i, j);
      }
    off += p.size();
  }
  return Pencil(std::move(a), std::move(b));
}

Pencil direct_sum(const Pencil& p, const Pencil& q) {
  const std::vector<Pencil> parts{p, q};
  return direct_sum(parts);
}

Pencil build_canonical(const CanonicalSpec& spec) {
  if (spec.blocks.empty()) throw Error(ErrorCode::InvalidSpec, "canonical spec has no blocks");
  std::vector<Pencil> parts;
  parts.reserve(spec.blocks.size());
  for (const auto& b : spec.blocks) parts.push_back(build_block(b));
  return direct_sum(parts);
}

PencilInvariants expected_invariants(const CanonicalSpec& spec) {
  PencilInvariants inv;
  for (const auto& b : spec.blocks) {
    const auto part = b.invariants();
    inv.n += part.n;
    inv.pairs.insert(inv.pairs.end(), part.pairs.begin(), part.pairs.end());
    inv.minimal_indices.insert(inv.minimal_indices.end(), part.minimal_indices.begin(),
                               part.minimal_indices.end());
  }
  canonicalize(inv);
  return inv;
}

CanonicalSpec canonical_spec_from_invariants(const PencilInvariants& inv) {
  if (!inv.size_identity_holds())
    throw Error(ErrorCode::UnrealizableSpec, "invariants violate the size identity: " + inv.str());
  if (inv.pairs.empty() && inv.minimal_indices.empty())
    throw Error(ErrorCode::UnrealizableSpec, "invariants describe an empty pencil");
  PencilInvariants sorted = inv;
  canonicalize(sorted);
  CanonicalSpec spec;
  for (const auto& d : sorted.pairs) {
    switch (d.kind) {
      case ElementaryDivisor::Kind::Infinity: spec.blocks.push_back(BlockSpec::inf(d.exponent)); break;
      case ElementaryDivisor::Kind::Finite:
        spec.blocks.push_back(BlockSpec::finite(d.alpha, d.exponent));
        break;
      case ElementaryDivisor::Kind::Quadratic: {
        if (d.modulus.degree() != 2 || !d.modulus.is_monic())
          throw Error(ErrorCode::UnrealizableSpec, "quadratic divisor with a bad modulus");
        const Rat a = -d.modulus[1] / Rat(2);
        const Rat b2 = d.modulus[0] - a * a;
        Rat b;
        if (b2.sign() > 0 && rational_sqrt(b2, &b))
          spec.blocks.push_back(BlockSpec::complex(a, b, d.exponent));
        else
          spec.blocks.push_back(BlockSpec::quadratic(d.modulus, d.exponent));
        break;
      }
    }
  }
  for (int e : sorted.minimal_indices) spec.blocks.push_back(BlockSpec::min_index(e));
  return spec;
}

Pencil canonical_from_invariants(const PencilInvariants& inv) {
  try {
    return build_canonical(canonical_spec_from_invariants(inv));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidSpec) throw Error(ErrorCode::UnrealizableSpec, e.what());
    throw;
  }
}

}  // namespace pencilaid
