#include <random>

#include "doctest.h"
#include "pencilaid/error.hpp"
#include "pencilaid/quadext.hpp"

using namespace pencilaid;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Rat small(std::mt19937_64& g) {
  return Rat(static_cast<long>(g() % 11) - 5, static_cast<long>(g() % 4) + 1);
}

}  // namespace

TEST_CASE("θ satisfies its modulus") {
  for (const auto& m : {P({1, 0, 1}), P({-2, 0, 1}), P({1, 1, 1}), P({3, -2, 1})}) {
    const auto f = QuadField::make(m);
    const QuadExt t = QuadExt::theta(f);
    CHECK((t * t + QuadExt(f, m[1]) * t + QuadExt(f, m[0])).is_zero());
  }
}

TEST_CASE("reducible or non-monic moduli are rejected") {
  CHECK_THROWS_AS(QuadField::make(P({-1, 0, 1})), Error);
  CHECK_THROWS_AS(QuadField::make(P({1, 0, 2})), Error);
  CHECK_THROWS_AS(QuadField::make(P({1, 0, 0, 1})), Error);
}

TEST_CASE("real roots flag follows the discriminant") {
  CHECK(QuadField::make(P({-2, 0, 1}))->real_roots());
  CHECK_FALSE(QuadField::make(P({1, 0, 1}))->real_roots());
}

TEST_CASE("random field identities in Q(θ)") {
  std::mt19937_64 g(7);
  for (const auto& m : {P({1, 0, 1}), P({-3, 1, 1}), P({5, 2, 1})}) {
    const auto f = QuadField::make(m);
    for (int k = 0; k < 50; ++k) {
      const QuadExt a(f, small(g), small(g)), b(f, small(g), small(g)), c(f, small(g), small(g));
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!b.is_zero()) {
        CHECK((a / b) * b == a);
        CHECK(b * b.inverse() == one_like(b));
        CHECK(b.norm().sign() != 0);
      }
    }
  }
}

TEST_CASE("mixing fields is a modulus mismatch") {
  const auto f = QuadField::make(P({1, 0, 1}));
  const auto h = QuadField::make(P({2, 0, 1}));
  try {
    (void)(QuadExt::theta(f) + QuadExt::theta(h));
    FAIL("mixed fields");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModulusMismatch);
  }
  CHECK_THROWS_AS((void)QuadExt(f).inverse(), Error);
}
