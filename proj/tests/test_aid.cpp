#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace pencilaid;
using support::P;

namespace {

const FieldMode kModes[] = {FieldMode::Real, FieldMode::AlgebraicallyClosed};

std::vector<CanonicalSpec> sample_specs() {
  std::vector<CanonicalSpec> s;
  for (int e = 1; e <= 3; ++e) s.push_back({{BlockSpec::inf(e)}});
  for (int f = 1; f <= 3; ++f) s.push_back({{BlockSpec::finite(Rat(-2), f)}});
  for (int m = 1; m <= 2; ++m) s.push_back({{BlockSpec::complex(Rat(1), Rat(1), m)}});
  for (int m = 1; m <= 2; ++m) s.push_back({{BlockSpec::quadratic(P({-2, 0, 1}), m)}});
  for (int e = 1; e <= 4; ++e) s.push_back({{BlockSpec::min_index(e)}});
  s.push_back({{BlockSpec::min_index(0), BlockSpec::inf(2)}});
  s.push_back({{BlockSpec::finite(Rat(1), 2), BlockSpec::finite(Rat(1), 1), BlockSpec::min_index(2)}});
  s.push_back({{BlockSpec::complex(Rat(0), Rat(1), 1), BlockSpec::inf(1), BlockSpec::min_index(1)}});
  s.push_back({{BlockSpec::quadratic(P({3, 0, 1}), 1), BlockSpec::finite(Rat(1, 2), 2)}});
  return s;
}

}  // namespace

TEST_CASE("AID of the singular fixture is cut out by r5 = s3 = 0, s5 = r4, s4 = r3") {
  const Genus2Algebra g(support::fixture("singular_m2.json"));
  const auto r = solve_aid(g, FieldMode::Real);
  CHECK(r.dim_inn == 5);
  CHECK(r.dim_c == 10);
  CHECK(r.dim_aid == 6);
  // Unknowns (r1..r5, s1..s5).
  RatMatrix cond(4, 10);
  cond(0, 4) = Rat(1);
  cond(1, 7) = Rat(1);
  cond(2, 9) = Rat(1);
  cond(2, 3) = Rat(-1);
  cond(3, 8) = Rat(1);
  cond(3, 2) = Rat(-1);
  std::vector<CentralDerivation> want;
  for (const auto& v : kernel_basis(cond)) want.push_back(CentralDerivation::from_coordinates(v));
  const DerivationSpace w{want};
  CHECK(span_contains(r.aid_basis, w, 5));
  CHECK(span_contains(w, r.aid_basis, 5));
}

TEST_CASE("regular fixture: AID = C over the reals, AID = Inn when closed") {
  const Genus2Algebra g(support::fixture("regular_c011.json"));
  const auto real = solve_aid(g, FieldMode::Real);
  const auto closed = solve_aid(g, FieldMode::AlgebraicallyClosed);
  CHECK(real.dim_aid == 8);
  CHECK(closed.dim_aid == 4);
  CHECK(span_contains(closed.aid_basis, inner_basis(g), 4));
  CHECK(span_contains(inner_basis(g), closed.aid_basis, 4));
}

TEST_CASE("solver agrees with the sampling oracle") {
  std::uint64_t seed = 21;
  for (const auto& spec : sample_specs())
    for (FieldMode mode : kModes) {
      const Pencil p = random_congruence(build_canonical(spec), seed++);
      const auto r = solve_aid(p, mode);
      CAPTURE(spec.blocks[0].str());
      CAPTURE(field_mode_name(mode));
      CHECK(r.dim_aid == oracle::aid_by_sampling(p, oracle::probe_for(spec, mode)));
    }
}

TEST_CASE("formula agrees with per-block dimensions") {
  for (const auto& spec : sample_specs())
    for (FieldMode mode : kModes) {
      std::size_t inn = 0, aid = 0;
      for (const auto& b : spec.blocks) {
        const auto [i, a] = oracle::block_dims(b, mode);
        inn += i;
        aid += a;
      }
      const auto f = formula_dimension(expected_invariants(spec), mode);
      CHECK(f.dim_inn == inn);
      CHECK(f.dim_aid == aid);
    }
}

TEST_CASE("Inn ⊆ AID ⊆ C") {
  for (const auto& spec : sample_specs())
    for (FieldMode mode : kModes) {
      const Pencil p = build_canonical(spec);
      const auto r = solve_aid(p, mode);
      CHECK(span_contains(r.aid_basis, inner_basis(p), p.size()));
      CHECK(span_contains(central_derivations(p), r.aid_basis, p.size()));
    }
}

TEST_CASE("witness certification separates AID from its complement") {
  for (const auto& spec : sample_specs())
    for (FieldMode mode : kModes) {
      const Pencil p = build_canonical(spec);
      const auto r = solve_aid(p, mode);
      const auto pts = structured_witness_points(p, mode, 3);
      for (const auto& d : r.aid_basis.basis) CHECK(certify_at(p, d, pts));
      for (const auto& d : aid_complement(p, r).basis) CHECK_FALSE(certify_at(p, d, pts));
    }
}

TEST_CASE("real mode drops rows for non-real quadratic eigenvalues") {
  const Pencil p = support::fixture("regular_c011.json");
  const auto count = [](const ConstraintSystem& s) {
    return std::count(s.sources.begin(), s.sources.end(), ConstraintSource::QuadraticEigenvalue);
  };
  CHECK(count(assemble_constraints(p, FieldMode::Real)) == 0);
  CHECK(count(assemble_constraints(p, FieldMode::AlgebraicallyClosed)) > 0);
  const Pencil split = build_block(BlockSpec::quadratic(P({-2, 0, 1}), 1));
  CHECK(count(assemble_constraints(split, FieldMode::Real)) > 0);
}

TEST_CASE("cross checks") {
  const auto r = cross_check(support::fixture("singular_m2.json"), FieldMode::Real);
  CHECK(r.agree);
  CHECK(r.str() == "(inn 5, aid 6) ✓");
  support::require_code(ErrorCode::GenusTooLow, [] { (void)cross_check(support::fixture("a_equals_b.json"), FieldMode::Real); });
  CHECK(cross_check_pencil(build_block(BlockSpec::inf(1)), FieldMode::Real).agree);
}

TEST_CASE("direct sums add") {
  const Pencil f = build_block(BlockSpec::inf(1)), m2 = build_block(BlockSpec::min_index(2));
  for (FieldMode mode : kModes) {
    CHECK(direct_sum_additivity_check(f, m2, mode));
    CHECK(solve_aid(direct_sum(f, m2), mode).dim_aid == 8);
  }
  support::require_code(ErrorCode::GenusTooLow, [&] {
    (void)direct_sum_additivity_check(build_block(BlockSpec::min_index(0)), m2, FieldMode::Real);
  });
  support::require_code(ErrorCode::GenusTooLow, [&] {
    (void)direct_sum_additivity_check(f, f, FieldMode::Real);
  });
}

TEST_CASE("formula input validation") {
  PencilInvariants bad;
  bad.n = 4;
  bad.minimal_indices = {1};
  support::require_code(ErrorCode::SizeIdentityViolation, [&] { (void)formula_dimension(bad, FieldMode::Real); });
}

TEST_CASE("cubic eigenvalue fields are rejected by the solver") {
  const Pencil p = support::companion_pencil(P({-2, 0, 0, 1}));
  support::require_code(ErrorCode::IrreducibleFactorTooLarge, [&] { (void)solve_aid(p, FieldMode::Real); });
}

TEST_CASE("point-wise criterion by hand") {
  const Pencil p = support::fixture("singular_m2.json");
  // D = (r, s) with r5 = 1 violates the criterion at x = (0, 0, 0, 0, 1).
  CentralDerivation d{RatVector(5, Rat(0)), RatVector(5, Rat(0))};
  d.d1[4] = Rat(1);
  const RatVector x{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
  CHECK_FALSE(pointwise_solvable(p, d, x));
  const RatVector y{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)};
  CHECK(pointwise_solvable(p, d, y));
}
