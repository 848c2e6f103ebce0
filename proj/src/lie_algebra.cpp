#include "pencilaid/lie_algebra.hpp"

namespace pencilaid {

Element Element::basis_x(std::size_t n, std::size_t i) {
  Element e;
  e.x.assign(n, Rat(0));
  e.x.at(i) = Rat(1);
  return e;
}

RatVector CentralDerivation::coordinates() const {
  RatVector c = d1;
  c.insert(c.end(), d2.begin(), d2.end());
  return c;
}

CentralDerivation CentralDerivation::from_coordinates(const RatVector& c) {
  if (c.size() % 2 != 0) throw Error(ErrorCode::InvalidInput, "odd coordinate length");
  const auto half = static_cast<std::ptrdiff_t>(c.size() / 2);
  CentralDerivation d;
  d.d1.assign(c.begin(), c.begin() + half);
  d.d2.assign(c.begin() + half, c.end());
  return d;
}

std::size_t commutator_dimension(const Pencil& p) {
  const std::size_t n = p.size();
  RatMatrix m(2, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(0, i * n + j) = p.a()(i, j);
      m(1, i * n + j) = p.b()(i, j);
    }
  return rank(std::move(m));
}

Genus2Algebra::Genus2Algebra(Pencil pencil) : pencil_(std::move(pencil)) {
  if (commutator_dimension(pencil_) != 2)
    throw Error(ErrorCode::GenusTooLow, "A and B are linearly dependent; [g, g] has dimension < 2");
}

Genus2Algebra algebra_from_pencil(const Pencil& p) { return Genus2Algebra(p); }

Element bracket(const Genus2Algebra& g, const Element& u, const Element& v) {
  const std::size_t n = g.n();
  if (u.x.size() != n || v.x.size() != n)
    throw Error(ErrorCode::InvalidInput, "element has the wrong length");
  Element r;
  r.x.assign(n, Rat(0));
  const RatVector av = g.pencil().a() * v.x;
  const RatVector bv = g.pencil().b() * v.x;
  r.y[0] = dot(u.x, av);
  r.y[1] = dot(u.x, bv);
  return r;
}

Center center(const Pencil& p) { return {kernel_basis(p.stacked())}; }
Center center(const Genus2Algebra& g) { return center(g.pencil()); }

std::size_t inner_dimension(const Pencil& p) {
  return p.size() - center(p).x_basis.size();
}
std::size_t inner_dimension(const Genus2Algebra& g) { return inner_dimension(g.pencil()); }

DerivationSpace central_derivations(const Pencil& p) {
  const std::size_t n = p.size();
  const auto z = center(p).x_basis;
  DerivationSpace s;
  if (z.empty()) {
    for (std::size_t k = 0; k < 2 * n; ++k) {
      RatVector c(2 * n, Rat(0));
      c[k] = Rat(1);
      s.basis.push_back(CentralDerivation::from_coordinates(c));
    }
    return s;
  }
  RatMatrix zm(z.size(), n);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) zm(i, j) = z[i][j];
  const auto ann = kernel_basis(zm);
  for (int slot = 0; slot < 2; ++slot)
    for (const auto& f : ann) {
      CentralDerivation d;
      d.d1.assign(n, Rat(0));
      d.d2.assign(n, Rat(0));
      (slot == 0 ? d.d1 : d.d2) = f;
      s.basis.push_back(std::move(d));
    }
  return s;
}
DerivationSpace central_derivations(const Genus2Algebra& g) {
  return central_derivations(g.pencil());
}

DerivationSpace inner_basis(const Pencil& p) {
  const std::size_t n = p.size();
  // ad(x_i) sends x_j to a_ij·y_1 + b_ij·y_2.
  RatMatrix t(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t(j, i) = p.a()(i, j);
      t(n + j, i) = p.b()(i, j);
    }
  DerivationSpace s;
  for (std::size_t i : rref(std::move(t)).pivots) {
    CentralDerivation d;
    for (std::size_t j = 0; j < n; ++j) {
      d.d1.push_back(p.a()(i, j));
      d.d2.push_back(p.b()(i, j));
    }
    s.basis.push_back(std::move(d));
  }
  return s;
}
DerivationSpace inner_basis(const Genus2Algebra& g) { return inner_basis(g.pencil()); }

RatMatrix coordinate_matrix(const DerivationSpace& s, std::size_t n) {
  RatMatrix m(s.dim(), 2 * n);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto c = s.basis[i].coordinates();
    if (c.size() != 2 * n) throw Error(ErrorCode::InvalidInput, "derivation has the wrong length");
    for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) = c[j];
  }
  return m;
}

bool span_contains(const DerivationSpace& outer, const DerivationSpace& inner, std::size_t n) {
  IncrementalSpan span(2 * n);
  for (const auto& d : outer.basis) span.insert(d.coordinates());
  for (const auto& d : inner.basis)
    if (!span.contains(d.coordinates())) return false;
  return true;
}

}  // namespace pencilaid
