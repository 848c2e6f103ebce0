#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace pencilaid;
using support::P;

namespace {

void check_smith(const PolyMatrix& m) {
  const auto s = smith_normal_form(m);
  const PolyMatrix d = s.u * m * s.v;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i == j)
        CHECK(d(i, j) == s.diagonal[i]);
      else
        CHECK(d(i, j).is_zero());
    }
  const Poly du = oracle::poly_det(s.u), dv = oracle::poly_det(s.v);
  CHECK(du.degree() == 0);
  CHECK(dv.degree() == 0);
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    if (s.diagonal[i + 1].is_zero()) continue;
    CHECK(divmod(s.diagonal[i + 1], s.diagonal[i]).second.is_zero());
  }
  CHECK(s.diagonal == oracle::smith_by_minors(m));
  CHECK(invariant_polynomials(m) == s.diagonal);
}

}  // namespace

TEST_CASE("smith form of the four-dimensional regular fixture") {
  const Pencil p = support::fixture("regular_c011.json");
  const auto d = invariant_polynomials(p.poly_matrix());
  CHECK(d == std::vector<Poly>{P({1}), P({1}), P({1, 0, 1}), P({1, 0, 1})});
  check_smith(p.poly_matrix());
}

TEST_CASE("smith form of the five-dimensional singular fixture") {
  const Pencil p = support::fixture("singular_m2.json");
  const auto d = invariant_polynomials(p.poly_matrix());
  CHECK(d == std::vector<Poly>{P({1}), P({1}), P({1}), P({1}), Poly()});
  check_smith(p.poly_matrix());
}

TEST_CASE("smith forms agree with determinantal divisors") {
  std::vector<CanonicalSpec> specs{
      {{BlockSpec::inf(2)}},
      {{BlockSpec::finite(Rat(3, 2), 3)}},
      {{BlockSpec::complex(Rat(1), Rat(2), 1)}},
      {{BlockSpec::min_index(2)}},
      {{BlockSpec::finite(Rat(1), 1), BlockSpec::inf(1)}},
      {{BlockSpec::min_index(0), BlockSpec::min_index(1)}},
      {{BlockSpec::quadratic(P({-2, 0, 1}), 1)}},
  };
  std::uint64_t seed = 1;
  for (const auto& spec : specs) {
    const Pencil p = build_canonical(spec);
    check_smith(p.poly_matrix());
    check_smith(random_congruence(p, seed++).poly_matrix());
    check_smith(p.reversed_poly_matrix());
  }
}

TEST_CASE("smith form of rectangular and zero matrices") {
  PolyMatrix m(2, 3);
  m(0, 0) = P({0, 1});
  m(0, 2) = P({1, 1});
  m(1, 1) = P({0, 0, 1});
  check_smith(m);
  check_smith(PolyMatrix(3, 3));
}
