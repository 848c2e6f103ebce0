#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support.hpp"

using namespace pencilaid;
using support::P;

namespace {

// Congruence by a signed permutation matrix.
bool equal_up_to_signed_permutation(const Pencil& p, const Pencil& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
      const auto sign = [&](std::size_t i) { return (signs >> i & 1) ? Rat(-1) : Rat(1); };
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          const Rat s = sign(i) * sign(j);
          ok = s * p.a()(perm[i], perm[j]) == q.a()(i, j) && s * p.b()(perm[i], perm[j]) == q.b()(i, j);
        }
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("block sizes") {
  CHECK(build_block(BlockSpec::inf(3)).size() == 6);
  CHECK(build_block(BlockSpec::finite(Rat(1, 2), 2)).size() == 4);
  CHECK(build_block(BlockSpec::complex(Rat(0), Rat(1), 2)).size() == 8);
  CHECK(build_block(BlockSpec::min_index(3)).size() == 7);
  CHECK(build_block(BlockSpec::quadratic(P({-2, 0, 1}), 2)).size() == 8);
}

TEST_CASE("M0 is the 1x1 zero pencil") {
  const Pencil p = build_block(BlockSpec::min_index(0));
  CHECK(p.size() == 1);
  CHECK(is_zero_matrix(p.a()));
  CHECK(is_zero_matrix(p.b()));
}

TEST_CASE("F(∞,e) uses Δ for μ and the shifted Λ for λ") {
  const Pencil p = build_block(BlockSpec::inf(2));
  // Upper right block μΔ₂ + λΛ₂ = (0 μ; μ λ).
  CHECK(p.a()(0, 3) == Rat(1));
  CHECK(p.a()(1, 2) == Rat(1));
  CHECK(p.a()(0, 2) == Rat(0));
  CHECK(p.b()(1, 3) == Rat(1));
  CHECK(p.b()(0, 3) == Rat(0));
  CHECK(p.a()(3, 0) == Rat(-1));
}

TEST_CASE("F(α,f) is (λ − μα)Δ + μΛ") {
  const Pencil p = build_block(BlockSpec::finite(Rat(3), 2));
  CHECK(p.b()(0, 3) == Rat(1));
  CHECK(p.a()(0, 3) == Rat(-3));
  CHECK(p.a()(1, 2) == Rat(-3));
  CHECK(p.a()(1, 3) == Rat(1));
}

TEST_CASE("C(0,1,1) has T = R and matches the regular fixture") {
  const Pencil p = build_block(BlockSpec::complex(Rat(0), Rat(1), 1));
  // R = (−μ, λ; λ, μ)
  CHECK(p.a()(0, 2) == Rat(-1));
  CHECK(p.b()(0, 3) == Rat(1));
  CHECK(p.b()(1, 2) == Rat(1));
  CHECK(p.a()(1, 3) == Rat(1));
  CHECK(strictly_congruent(p, support::fixture("regular_c011.json")));
}

TEST_CASE("M2 is the singular fixture up to a signed permutation") {
  const Pencil m2 = build_block(BlockSpec::min_index(2));
  CHECK(m2.b()(0, 3) == Rat(1));
  CHECK(m2.a()(1, 3) == Rat(1));
  CHECK(equal_up_to_signed_permutation(m2, support::fixture("singular_m2.json")));
}

TEST_CASE("direct sums") {
  const Pencil f = build_block(BlockSpec::inf(1));
  const std::vector<Pencil> one{f};
  CHECK(direct_sum(one) == f);
  const auto s = invariants(direct_sum(f, build_block(BlockSpec::min_index(0))));
  CHECK(s.n == 3);
  CHECK(s.pairs == std::vector<ElementaryDivisor>{ElementaryDivisor::infinity(1)});
  CHECK(s.minimal_indices == std::vector<int>{0});
  const auto t = invariants(direct_sum(build_block(BlockSpec::min_index(2)), build_block(BlockSpec::finite(Rat(0), 1))));
  CHECK(t.pairs == std::vector<ElementaryDivisor>{ElementaryDivisor::finite(Rat(0), 1)});
  CHECK(t.minimal_indices == std::vector<int>{2});
  CHECK_THROWS_AS(direct_sum(std::vector<Pencil>{}), Error);
}

TEST_CASE("canonical pencils from invariants") {
  PencilInvariants inv;
  inv.n = 4;
  inv.pairs = {ElementaryDivisor::infinity(2)};
  CHECK(canonical_from_invariants(inv) == build_block(BlockSpec::inf(2)));

  PencilInvariants zero;
  zero.n = 2;
  zero.minimal_indices = {0, 0};
  const Pencil z = canonical_from_invariants(zero);
  CHECK(z.size() == 2);
  CHECK(is_zero_matrix(z.a()));
  CHECK(is_zero_matrix(z.b()));

  const Pencil ex = support::fixture("regular_c011.json");
  const auto spec = canonical_spec_from_invariants(invariants(ex));
  REQUIRE(spec.blocks.size() == 1);
  CHECK(spec.blocks[0].kind == BlockSpec::Kind::Complex);
  CHECK(spec.blocks[0].b == Rat(1));
  CHECK(strictly_congruent(canonical_from_invariants(invariants(ex)), ex));
}

TEST_CASE("quadratics without a rational complex form use the companion block") {
  for (const Poly& q : {P({3, 0, 1}), P({-2, 0, 1}), P({-1, 1, 1})}) {
    PencilInvariants inv;
    inv.n = 8;
    inv.pairs = {ElementaryDivisor::quadratic(q, 2)};
    const auto spec = canonical_spec_from_invariants(inv);
    CHECK(spec.blocks[0].kind == BlockSpec::Kind::Quadratic);
    CHECK(invariants(canonical_from_invariants(inv)) == inv);
  }
}

TEST_CASE("spec order and round trip") {
  PencilInvariants inv;
  inv.n = 2 + 4 + 4 + 3 + 1;
  inv.pairs = {ElementaryDivisor::quadratic(P({5, -2, 1}), 1), ElementaryDivisor::finite(Rat(-1), 2),
               ElementaryDivisor::infinity(1)};
  inv.minimal_indices = {1, 0};
  canonicalize(inv);
  const auto spec = canonical_spec_from_invariants(inv);
  REQUIRE(spec.blocks.size() == 5);
  CHECK(spec.blocks[0].kind == BlockSpec::Kind::Inf);
  CHECK(spec.blocks[1].kind == BlockSpec::Kind::Finite);
  CHECK(spec.blocks[2].kind == BlockSpec::Kind::Complex);
  CHECK(spec.blocks[2].a == Rat(1));
  CHECK(spec.blocks[2].b == Rat(2));
  CHECK(spec.blocks[3].exponent == 0);
  CHECK(spec.blocks[4].exponent == 1);
  CHECK(invariants(build_canonical(spec)) == inv);
}

TEST_CASE("invalid specs") {
  for (const auto& b : {BlockSpec::inf(0), BlockSpec::finite(Rat(1), 0), BlockSpec::complex(Rat(1), Rat(0), 1),
                        BlockSpec::complex(Rat(1), Rat(1), 0), BlockSpec::min_index(-1),
                        BlockSpec::quadratic(P({-1, 0, 1}), 1), BlockSpec::quadratic(P({1, 0, 2}), 1)}) {
    CAPTURE(b.str());
    support::require_code(ErrorCode::InvalidSpec, [&] { (void)build_block(b); });
  }
  support::require_code(ErrorCode::InvalidSpec, [] { (void)build_canonical(CanonicalSpec{}); });
}

TEST_CASE("unrealizable invariants") {
  PencilInvariants bad;
  bad.n = 5;
  bad.pairs = {ElementaryDivisor::infinity(1)};
  support::require_code(ErrorCode::UnrealizableSpec, [&] { (void)canonical_from_invariants(bad); });
  PencilInvariants empty;
  support::require_code(ErrorCode::UnrealizableSpec, [&] { (void)canonical_from_invariants(empty); });
}
