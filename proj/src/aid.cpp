#include "pencilaid/aid.hpp"

#include "pencilaid/canonical.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace pencilaid {

const char* field_mode_name(FieldMode mode) {
  return mode == FieldMode::Real ? "real" : "closed";
}

namespace {

struct Rows {
  std::size_t width;
  std::vector<RatVector> rows;
  std::vector<ConstraintSource> sources;

  void add(RatVector r, ConstraintSource s) {
    if (is_zero_vector(r)) return;
    rows.push_back(std::move(r));
    sources.push_back(s);
  }
  // [u | w] over the 2n unknowns.
  void add(const RatVector& u, const RatVector& w, ConstraintSource s) {
    RatVector r = u;
    r.insert(r.end(), w.begin(), w.end());
    add(std::move(r), s);
  }
};

RatVector scaled(const RatVector& v, const Rat& s) {
  RatVector r = v;
  for (auto& x : r) x *= s;
  return r;
}

RatVector combine(const RatVector& a, const RatVector& b, const Rat& sb) {
  RatVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += sb * b[i];
  return r;
}

struct Eigenvalues {
  std::vector<Rat> rational;
  std::vector<Poly> quadratic;
};

Eigenvalues eigenvalues(const Pencil& p) {
  Eigenvalues ev;
  for (const auto& d : finite_divisors(p)) {
    if (d.kind == ElementaryDivisor::Kind::Finite) {
      if (std::find(ev.rational.begin(), ev.rational.end(), d.alpha) == ev.rational.end())
        ev.rational.push_back(d.alpha);
    } else if (d.kind == ElementaryDivisor::Kind::Quadratic) {
      if (std::find(ev.quadratic.begin(), ev.quadratic.end(), d.modulus) == ev.quadratic.end())
        ev.quadratic.push_back(d.modulus);
    }
  }
  return ev;
}

bool quadratic_visible(const Poly& modulus, FieldMode mode) {
  return mode == FieldMode::AlgebraicallyClosed || quadratic_discriminant(modulus).sign() > 0;
}

}  // namespace

ConstraintSystem assemble_constraints(const Pencil& p, FieldMode mode) {
  const std::size_t n = p.size();
  Rows rows{2 * n, {}, {}};
  const RatVector zero(n, Rat(0));

  // d1(v(λ)) + λ·d2(v(λ)) ≡ 0, one row per power of λ.
  const auto mkb = minimal_kernel_basis(p);
  for (const auto& col : mkb.columns) {
    const int deg = poly_vector_degree(col);
    for (int k = 0; k <= deg + 1; ++k) {
      RatVector r(2 * n, Rat(0));
      for (std::size_t j = 0; j < n; ++j) {
        r[j] = col[j][k];
        if (k > 0) r[n + j] = col[j][k - 1];
      }
      rows.add(std::move(r), ConstraintSource::PolynomialKernel);
    }
  }

  const auto ev = eigenvalues(p);
  for (const auto& alpha : ev.rational)
    for (const auto& w : kernel_basis(p.at(alpha)))
      rows.add(w, scaled(w, alpha), ConstraintSource::FiniteEigenvalue);

  for (const auto& modulus : ev.quadratic) {
    if (!quadratic_visible(modulus, mode)) continue;
    const auto field = QuadField::make(modulus);
    const Rat& u = field->u();
    const Rat& v = field->v();
    for (const auto& w : kernel_basis_ext(p.at(QuadExt::theta(field)), field)) {
      RatVector w0(n), w1(n);
      for (std::size_t j = 0; j < n; ++j) {
        w0[j] = w[j].c0();
        w1[j] = w[j].c1();
      }
      // d1(w) + θ·d2(w) = 0 split along 1 and θ, using θ² = −uθ − v.
      rows.add(w0, scaled(w1, -v), ConstraintSource::QuadraticEigenvalue);
      rows.add(w1, combine(w0, w1, -u), ConstraintSource::QuadraticEigenvalue);
    }
  }

  for (const auto& w : kernel_basis(p.b())) rows.add(zero, w, ConstraintSource::Infinity);

  for (const auto& z : center(p).x_basis) {
    rows.add(z, zero, ConstraintSource::Centrality);
    rows.add(zero, z, ConstraintSource::Centrality);
  }

  ConstraintSystem sys{RatMatrix(rows.rows.size(), 2 * n), std::move(rows.sources)};
  for (std::size_t i = 0; i < rows.rows.size(); ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) sys.matrix(i, j) = rows.rows[i][j];
  return sys;
}

ConstraintSystem assemble_constraints(const Genus2Algebra& g, FieldMode mode) {
  return assemble_constraints(g.pencil(), mode);
}

AidResult solve_aid(const Pencil& p, FieldMode mode) {
  const auto sys = assemble_constraints(p, mode);
  AidResult r;
  r.mode = mode;
  r.dim_inn = inner_dimension(p);
  r.dim_c = 2 * r.dim_inn;
  for (const auto& c : kernel_basis(sys.matrix))
    r.aid_basis.basis.push_back(CentralDerivation::from_coordinates(c));
  r.dim_aid = r.aid_basis.dim();
  if (r.dim_aid < r.dim_inn || r.dim_aid > r.dim_c)
    throw Error(ErrorCode::Internal, "almost inner dimension outside [inn, c]");
  return r;
}

AidResult solve_aid(const Genus2Algebra& g, FieldMode mode) { return solve_aid(g.pencil(), mode); }

FormulaDims formula_dimension(const PencilInvariants& inv, FieldMode mode) {
  if (!inv.size_identity_holds())
    throw Error(ErrorCode::SizeIdentityViolation, "invariants violate the size identity: " + inv.str());
  std::size_t zeros = 0, extra = 0;
  for (int eps : inv.minimal_indices) {
    if (eps == 0)
      ++zeros;
    else
      extra += static_cast<std::size_t>(eps - 1);
  }
  for (const auto& d : inv.pairs) {
    const auto e = static_cast<std::size_t>(d.exponent);
    switch (d.kind) {
      case ElementaryDivisor::Kind::Infinity:
      case ElementaryDivisor::Kind::Finite: extra += 2 * (e - 1); break;
      case ElementaryDivisor::Kind::Quadratic:
        if (mode == FieldMode::Real && quadratic_discriminant(d.modulus).sign() < 0)
          extra += 4 * e;
        else
          extra += 4 * (e - 1);
        break;
    }
  }
  FormulaDims f;
  f.dim_inn = inv.n - zeros;
  f.dim_aid = f.dim_inn + extra;
  return f;
}

std::string CrossCheckReport::str() const {
  std::ostringstream os;
  os << "(inn " << formula.dim_inn << ", aid " << formula.dim_aid << ")";
  if (agree)
    os << " ✓";
  else
    os << " ✗ solver (inn " << solver.dim_inn << ", aid " << solver.dim_aid << ")";
  return os.str();
}

CrossCheckReport cross_check_pencil(const Pencil& p, FieldMode mode) {
  CrossCheckReport r;
  r.mode = mode;
  r.invariants = invariants(p);
  r.formula = formula_dimension(r.invariants, mode);
  const auto s = solve_aid(p, mode);
  r.solver = {s.dim_inn, s.dim_aid};
  r.agree = r.formula == r.solver;
  return r;
}

CrossCheckReport cross_check(const Pencil& p, FieldMode mode) {
  const Genus2Algebra g(p);
  return cross_check_pencil(g.pencil(), mode);
}

bool direct_sum_additivity_check(const Pencil& p, const Pencil& q, FieldMode mode) {
  if (commutator_dimension(p) == 0 || commutator_dimension(q) == 0)
    throw Error(ErrorCode::GenusTooLow, "direct summand is the zero pencil");
  const Pencil sum = direct_sum(p, q);
  const Genus2Algebra g(sum);
  return solve_aid(g, mode).dim_aid == solve_aid(p, mode).dim_aid + solve_aid(q, mode).dim_aid;
}

namespace {

Rat lift(const Rat&, const Rat& r) { return r; }
QuadExt lift(const QuadExt& zero, const Rat& r) { return QuadExt(zero.field(), r); }

template <class T>
bool solvable_impl(const Pencil& p, const CentralDerivation& d, std::span<const T> x,
                   const T& zero) {
  const std::size_t n = p.size();
  if (x.size() != n || d.d1.size() != n || d.d2.size() != n)
    throw Error(ErrorCode::InvalidInput, "length mismatch in point-wise check");
  Matrix<T> l(2, n + 1, zero);
  T r0 = zero, r1 = zero;
  for (std::size_t j = 0; j < n; ++j) {
    T a = zero, b = zero;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      if (!p.a()(i, j).is_zero()) a += x[i] * lift(zero, p.a()(i, j));
      if (!p.b()(i, j).is_zero()) b += x[i] * lift(zero, p.b()(i, j));
    }
    l(0, j) = a;
    l(1, j) = b;
    r0 += x[j] * lift(zero, d.d1[j]);
    r1 += x[j] * lift(zero, d.d2[j]);
  }
  Matrix<T> lhs(2, n, zero);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < n; ++j) lhs(i, j) = l(i, j);
  l(0, n) = r0;
  l(1, n) = r1;
  return rank(lhs) == rank(l);
}

}  // namespace

bool pointwise_solvable(const Pencil& p, const CentralDerivation& d, std::span<const Rat> x) {
  return solvable_impl<Rat>(p, d, x, Rat(0));
}

bool pointwise_solvable(const Pencil& p, const CentralDerivation& d, std::span<const QuadExt> x) {
  if (x.empty()) throw Error(ErrorCode::InvalidInput, "empty point");
  return solvable_impl<QuadExt>(p, d, x, QuadExt(x.front().field()));
}

RatVector random_rational_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  RatVector v(n);
  for (auto& x : v) {
    const auto num = static_cast<long>(gen() % 21) - 10;
    const auto den = static_cast<long>(gen() % 4) + 1;
    x = Rat(num, den);
  }
  return v;
}

WitnessPoints structured_witness_points(const Pencil& p, FieldMode mode, std::uint64_t seed) {
  const std::size_t n = p.size();
  WitnessPoints w;
  auto add_fiber = [&](const std::vector<RatVector>& basis) {
    for (const auto& v : basis) w.rational.push_back(v);
    if (basis.size() > 1) {
      RatVector sum(n, Rat(0));
      for (const auto& v : basis)
        for (std::size_t j = 0; j < n; ++j) sum[j] += v[j];
      w.rational.push_back(std::move(sum));
    }
  };

  std::mt19937_64 gen(seed);
  const auto mkb = minimal_kernel_basis(p);
  for (int k = 0; k < 2 && !mkb.columns.empty(); ++k) {
    const Rat b(static_cast<long>(gen() % 41) - 20, static_cast<long>(gen() % 7) + 1);
    std::vector<RatVector> fiber;
    for (const auto& col : mkb.columns) fiber.push_back(eval_poly_vector(col, b));
    add_fiber(fiber);
  }

  const auto ev = eigenvalues(p);
  for (const auto& alpha : ev.rational) add_fiber(kernel_basis(p.at(alpha)));
  add_fiber(kernel_basis(p.a()));
  add_fiber(kernel_basis(p.b()));

  for (const auto& modulus : ev.quadratic) {
    if (!quadratic_visible(modulus, mode)) continue;
    const auto field = QuadField::make(modulus);
    const auto basis = kernel_basis_ext(p.at(QuadExt::theta(field)), field);
    for (const auto& v : basis) w.extension.push_back(v);
    if (basis.size() > 1) {
      QuadVector sum(n, QuadExt(field));
      for (const auto& v : basis)
        for (std::size_t j = 0; j < n; ++j) sum[j] += v[j];
      w.extension.push_back(std::move(sum));
    }
  }

  for (int k = 0; k < 3; ++k) w.rational.push_back(random_rational_vector(n, gen()));
  return w;
}

bool certify_at(const Pencil& p, const CentralDerivation& d, const WitnessPoints& points) {
  for (const auto& x : points.rational)
    if (!pointwise_solvable(p, d, std::span<const Rat>(x))) return false;
  for (const auto& x : points.extension)
    if (!pointwise_solvable(p, d, std::span<const QuadExt>(x))) return false;
  return true;
}

DerivationSpace aid_complement(const Pencil& p, const AidResult& aid) {
  const std::size_t n = p.size();
  IncrementalSpan span(2 * n);
  for (const auto& d : aid.aid_basis.basis) span.insert(d.coordinates());
  DerivationSpace out;
  for (const auto& d : central_derivations(p).basis)
    if (span.insert(d.coordinates())) out.basis.push_back(d);
  return out;
}

}  // namespace pencilaid
