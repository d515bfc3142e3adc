#include "limits/limits.hpp"

#include <algorithm>

#include "algebra/subspace.hpp"
#include "coloring/coloring.hpp"
#include "common/errors.hpp"

namespace hexcol {

namespace {

const Simplex kT{1, 2, 3, 4};

Laurent omega(const Field& f, Elem rho) {
  return Laurent::constant(f, 1) + Laurent::monomial(f, rho, 1);
}

}  // namespace

CocycleData2::CocycleData2(Field f, int vertices, std::map<Simplex, Elem> rho)
    : field_(std::move(f)), vertices_(vertices), rho_(std::move(rho)) {
  if (vertices < 4 || vertices > 5) throw InputError("2-cocycle data lives on 4 or 5 vertices");
  Simplex all;
  for (int v = 1; v <= vertices; ++v) all.push_back(v);
  for (const auto& tri : faces_of(all, 2)) {
    auto it = rho_.find(tri);
    if (it == rho_.end()) throw InputError("missing value for triangle " + simplex_label(tri));
    if (it->second >= field_.order()) throw InputError("value outside " + field_.name());
  }
  for (const auto& t : faces_of(all, 3)) {
    const Elem s = field_.sub(field_.add(at(t, 1, 2, 3), at(t, 1, 3, 4)), field_.add(at(t, 1, 2, 4), at(t, 2, 3, 4)));
    if (s) throw InputError("cocycle condition fails on tetrahedron " + simplex_label(t));
  }
}

CocycleData2 CocycleData2::tetrahedron(const Field& f, Elem r123, Elem r124, Elem r134, Elem r234) {
  return CocycleData2(f, 4, {{{1, 2, 3}, r123}, {{1, 2, 4}, r124}, {{1, 3, 4}, r134}, {{2, 3, 4}, r234}});
}

CocycleData2 CocycleData2::random(const Field& f, int vertices, std::mt19937_64& rng) {
  Simplex all;
  for (int v = 1; v <= vertices; ++v) all.push_back(v);
  std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::map<Simplex, Elem> alpha;
    for (const auto& e : faces_of(all, 1)) alpha[e] = pick(rng);
    std::map<Simplex, Elem> rho;
    for (const auto& tri : faces_of(all, 2))
      rho[tri] = f.add(f.sub(alpha[{tri[1], tri[2]}], alpha[{tri[0], tri[2]}]), alpha[{tri[0], tri[1]}]);
    CocycleData2 out(f, vertices, std::move(rho));
    if (out.generic()) return out;
  }
  throw DomainError("no generic 2-cocycle found over " + f.name());
}

Elem CocycleData2::at(const Simplex& triangle) const {
  auto it = rho_.find(triangle);
  if (it == rho_.end()) throw InputError("no value for triangle " + simplex_label(triangle));
  return it->second;
}

bool CocycleData2::generic_on(const Simplex& t) const { return at(t, 1, 2, 3) != at(t, 1, 2, 4); }

bool CocycleData2::generic() const {
  Simplex all;
  for (int v = 1; v <= vertices_; ++v) all.push_back(v);
  for (const auto& t : faces_of(all, 3))
    if (!generic_on(t)) return false;
  return true;
}

LaurentMatrix nonconstant_functionals(const CocycleData2& rho, const Simplex& t) {
  const Field& f = rho.field();
  const Laurent w123 = omega(f, rho.at(t, 1, 2, 3)), w124 = omega(f, rho.at(t, 1, 2, 4)),
                w134 = omega(f, rho.at(t, 1, 3, 4)), w234 = omega(f, rho.at(t, 2, 3, 4));
  const Laurent zero(f);
  LaurentMatrix m(f, 6, 2);
  const Laurent rows[6][2] = {{w234 - w134, zero}, {w124, w234},  {-w123, -w234},
                              {-w124, -w134},      {w123, w134}, {zero, w123 - w124}};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.set(i, j, rows[i][j]);
  return m;
}

LaurentMatrix a_o(const Field& f) {
  LaurentMatrix a(f, 2, 2);
  a.set(0, 0, Laurent::constant(f, 1));
  a.set(0, 1, Laurent::monomial(f, 1, -1));
  a.set(1, 1, Laurent::monomial(f, f.neg(1), -1));
  return a;
}

Matrix a_1(const CocycleData2& rho, const Simplex& t) {
  const Field& f = rho.field();
  Matrix a = Matrix::identity(f, 2);
  a.set(0, 1, f.sub(rho.at(t, 1, 3, 4), rho.at(t, 1, 2, 4)));
  return a;
}

Matrix a_2(const CocycleData2& rho, const Simplex& t) {
  const Field& f = rho.field();
  if (!rho.generic_on(t)) throw DomainError("rho_123 = rho_124 on " + simplex_label(t) + ": A_2 is undefined");
  Matrix a = Matrix::identity(f, 2);
  a.set(1, 1, f.inv(f.sub(rho.at(t, 1, 2, 3), rho.at(t, 1, 2, 4))));
  return a;
}

Matrix constant_functionals(const Field& f) {
  Matrix m(f, 6, 2);
  const Simplex u{1, 2, 3, 4, 5};
  const auto edges = faces_of(kT, 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Block b = edge_functional_block(u, edges[i], kT);
    m.set(i, 0, f.from_int(b[0]));
    m.set(i, 1, f.from_int(b[1]));
  }
  return m;
}

LimitSteps limit_steps(const LaurentMatrix& m, const CocycleData2& rho, const Simplex& t) {
  LimitSteps s{m.multiply(a_o(m.field())), Matrix(m.field(), 0, 0), Matrix(m.field(), 0, 0)};
  if (s.times_a_o.has_negative_powers()) throw DomainError("M A_o keeps negative powers of o; the limit is undefined");
  s.intermediate = s.times_a_o.at_zero();
  s.result = s.intermediate.multiply(a_1(rho, t)).multiply(a_2(rho, t));
  return s;
}

Matrix limit_transform(const LaurentMatrix& m, const CocycleData2& rho, const Simplex& t) {
  return limit_steps(m, rho, t).result;
}

Matrix limit_one_shot(const LaurentMatrix& m, const CocycleData2& rho, const Simplex& t) {
  const LaurentMatrix a = a_o(m.field()).multiply(a_1(rho, t)).multiply(a_2(rho, t));
  const LaurentMatrix p = m.multiply(a);
  if (p.has_negative_powers()) throw DomainError("M A_o A_1 A_2 keeps negative powers of o; the limit is undefined");
  return p.at_zero();
}

Matrix expected_intermediate(const CocycleData2& rho, const Simplex& t) {
  const Field& f = rho.field();
  const Elem r123 = rho.at(t, 1, 2, 3), r124 = rho.at(t, 1, 2, 4), r134 = rho.at(t, 1, 3, 4),
             r234 = rho.at(t, 2, 3, 4);
  const Elem one = 1, m1 = f.neg(1);
  const Elem rows[6][2] = {{0, f.sub(r234, r134)},   {one, f.sub(r124, r234)}, {m1, f.sub(r234, r123)},
                           {m1, f.sub(r134, r124)},  {one, f.sub(r123, r134)}, {0, f.sub(r124, r123)}};
  Matrix m(f, 6, 2);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.set(i, j, rows[i][j]);
  return m;
}

EdgeVectorLimitReport edge_vector_limit_check(const CocycleData2& rho) {
  if (rho.vertices() != 5) throw InputError("the edge vector check needs cocycle data on 12345");
  const Field& f = rho.field();
  const Triangulation u = Triangulation::standard_simplex(4);
  const auto& edges = u.simplices(1);
  const auto& tetra = u.simplices(3);
  LaurentMatrix phi(f, edges.size(), 2 * tetra.size());
  LaurentMatrix a(f, 2 * tetra.size(), 2 * tetra.size());
  const LaurentMatrix ao = a_o(f);
  for (std::size_t ti = 0; ti < tetra.size(); ++ti) {
    const Simplex& t = tetra[ti];
    int omitted = 1;
    while (std::find(t.begin(), t.end(), omitted) != t.end()) ++omitted;
    const bool negate = omitted % 2 == 0;
    const LaurentMatrix block = nonconstant_functionals(rho, t);
    const auto t_edges = faces_of(t, 1);
    for (std::size_t e = 0; e < t_edges.size(); ++e) {
      const std::size_t row = u.index_of(t_edges[e]);
      for (std::size_t j = 0; j < 2; ++j) phi.set(row, 2 * ti + j, negate ? -block.at(e, j) : block.at(e, j));
    }
    const LaurentMatrix at = ao.multiply(a_1(rho, t)).multiply(a_2(rho, t));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) a.set(2 * ti + i, 2 * ti + j, at.at(i, j));
  }
  EdgeVectorLimitReport rep;
  const LaurentMatrix transformed = phi.multiply(a);
  if (transformed.has_negative_powers()) return rep;
  const Matrix at0 = transformed.at_zero();
  rep.functionals_match = at0 == functional_matrix(u, f);
  rep.nonconstant_dim = phi.cols() - phi.generic_rank();
  const Subspace limit = Subspace::kernel(at0);
  rep.limit_dim = limit.dim();
  rep.psi_span_matches = Subspace::span(edge_vector_matrix(u, f)) == limit;
  rep.pass = rep.functionals_match && rep.nonconstant_dim == rep.limit_dim && rep.psi_span_matches;
  return rep;
}

}  // namespace hexcol
