#include "doctest.h"
#include "pencilaid/error.hpp"
#include "pencilaid/polynomial.hpp"

using namespace pencilaid;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Poly expand(const Factorization& f) {
  Poly r = Poly::constant(f.unit);
  for (const auto& [p, e] : f.factors)
    for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace

TEST_CASE("degree, trimming and evaluation") {
  CHECK(Poly().degree() == -1);
  CHECK(P({1, 2, 0, 0}).degree() == 1);
  CHECK(P({1, 0, 1}).eval(Rat(2)) == Rat(5));
  CHECK(P({1, 0, 1}).str() == "λ^2 + 1");
  CHECK(P({0, 3, 1}).derivative() == P({3, 2}));
}

TEST_CASE("division with remainder") {
  const Poly a = P({-1, 0, 0, 1}), b = P({-1, 1});
  const auto [q, r] = divmod(a, b);
  CHECK(q == P({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(a, Poly()), Error);
  const auto [q2, r2] = divmod(P({1, 0, 1}), P({0, 2}));
  CHECK(q2 * P({0, 2}) + r2 == P({1, 0, 1}));
}

TEST_CASE("gcd is monic") {
  CHECK(poly_gcd(P({-2, 0, 2}), P({2, 2})) == P({1, 1}));
  CHECK(poly_gcd(P({1, 0, 1}), P({-1, 1})) == P({1}));
  CHECK(poly_gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("factor λ³ − λ into the canonical order") {
  const auto f = factor_low_degree(P({0, -1, 0, 1}));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].first == P({-1, 1}));
  CHECK(f.factors[1].first == P({0, 1}));
  CHECK(f.factors[2].first == P({1, 1}));
}

TEST_CASE("factor (λ² + 1)²") {
  const auto f = factor_low_degree(P({1, 0, 2, 0, 1}));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == P({1, 0, 1}));
  CHECK(f.factors[0].second == 2);
}

TEST_CASE("factorizations multiply back") {
  const std::vector<Poly> cases{
      P({6, -5, 1}),
      P({2, 0, -1}) * P({1, 0, 1}) * P({1, 1}),
      P({1, 1, 1}) * P({3, 0, 1}),
      P({-2, 0, 1}) * P({-2, 0, 1}) * P({0, 1}) * P({0, 1}) * P({0, 1}),
      Poly({Rat(1, 2), Rat(3), Rat(-4, 3)}) * P({5, 0, 1}),
      P({2, 3, 1, 4}) * P({1, 4, 1})
  };
  for (const auto& p : cases) {
    CAPTURE(p.str());
    try {
      const auto f = factor_low_degree(p);
      CHECK(expand(f) == p);
      for (const auto& [q, e] : f.factors) {
        CHECK(q.is_monic());
        CHECK(e >= 1);
      }
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IrreducibleFactorTooLarge);
    }
  }
}

TEST_CASE("irreducible cubic is rejected") {
  try {
    (void)factor_low_degree(P({-2, 0, 0, 1}));
    FAIL("accepted a cubic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IrreducibleFactorTooLarge);
  }
  CHECK_THROWS_AS(factor_low_degree(P({1, 0, 1, 0, 1, 0, 1})), Error);  // (λ² + 1)(λ⁴ + 1)
}

TEST_CASE("products of two irreducible quadratics are split") {
  const auto g = factor_low_degree(P({1, 0, 1, 0, 1}));  // λ⁴ + λ² + 1
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].first == P({1, -1, 1}));
  CHECK(g.factors[1].first == P({1, 1, 1}));

  const auto f = factor_low_degree(P({1, 0, 1}) * P({2, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == P({1, 0, 1}));
  CHECK(f.factors[1].first == P({2, 0, 1}));
}

TEST_CASE("square-free decomposition") {
  const Poly p = P({-1, 1}) * P({-1, 1}) * P({1, 1}) * P({2, 0, 1}) * P({2, 0, 1}) * P({2, 0, 1});
  const auto d = squarefree_decomposition(p);
  Poly back = Poly::constant(Rat(1));
  for (const auto& [q, e] : d)
    for (int i = 0; i < e; ++i) back = back * q;
  CHECK(back == p);
}
