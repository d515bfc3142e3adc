#include "homology/homology.hpp"

#include "common/errors.hpp"

namespace hexcol {

Matrix boundary_matrix(const Triangulation& k, int n, const Field& f) {
  if (n < 1 || n > k.dim()) throw InputError("boundary degree " + std::to_string(n) + " out of range");
  Matrix m(f, k.count(n - 1), k.count(n));
  const Elem minus = f.neg(1);
  for (std::size_t j = 0; j < k.count(n); ++j) {
    const Simplex& s = k.simplices(n)[j];
    for (std::size_t drop = 0; drop < s.size(); ++drop)
      m.set(k.index_of(drop_vertex(s, drop)), j, drop % 2 == 0 ? 1 : minus);
  }
  return m;
}

namespace {

// Z_n = ker d_n and B_n = im d_{n+1} as subspaces of C_n.
Subspace cycles(const Triangulation& k, int n, const Field& f) {
  if (n == 0) return Subspace::whole(f, k.count(0));
  return Subspace::kernel(boundary_matrix(k, n, f));
}

Subspace boundaries(const Triangulation& k, int n, const Field& f) {
  if (n == k.dim()) return Subspace(f, k.count(n));
  return Subspace::span(boundary_matrix(k, n + 1, f).transpose());
}

Subspace cocycle_space(const Triangulation& k, int n, const Field& f) {
  if (n == k.dim()) return Subspace::whole(f, k.count(n));
  return Subspace::kernel(boundary_matrix(k, n + 1, f).transpose());
}

Subspace coboundary_space(const Triangulation& k, int n, const Field& f) {
  if (n == 0) return Subspace(f, k.count(0));
  return Subspace::span(boundary_matrix(k, n, f));
}

// Inverse of a square matrix (must be invertible).
Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, 1);
  }
  const auto e = row_reduce(aug);
  if (e.rank() != n || e.pivots.back() != n - 1) throw std::logic_error("pairing matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, e.basis.at(i, n + j));
  return inv;
}

}  // namespace

HomologyBasis homology_basis(const Triangulation& k, int n, const Field& f) {
  if (n < 0 || n > k.dim()) throw InputError("homology degree " + std::to_string(n) + " out of range");
  HomologyBasis out;
  out.degree = n;
  QuotientSpace h(cycles(k, n, f), boundaries(k, n, f));
  QuotientSpace co(cocycle_space(k, n, f), coboundary_space(k, n, f));
  if (h.dim() != co.dim()) throw std::logic_error("homology and cohomology dimensions differ");
  out.cycles = h.representatives();
  const auto reps = co.representatives();
  const std::size_t dim = h.dim();
  if (dim == 0) return out;
  // P(j, i) = <c_j, z_i>; the dual cocycles are the rows of P^{-1} applied to the c_j
  Matrix p(f, dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) p.set(j, i, dot(f, reps[j], out.cycles[i]));
  const Matrix a = inverse(p);
  for (std::size_t r = 0; r < dim; ++r) {
    Vector z(k.count(n), 0);
    for (std::size_t j = 0; j < dim; ++j)
      if (a.at(r, j) != 0) z = add(f, z, scale(f, a.at(r, j), reps[j]));
    out.cocycles.push_back(std::move(z));
  }
  return out;
}

std::size_t betti(const Triangulation& k, int n, const Field& f) {
  const std::size_t z = n == 0 ? k.count(0) : k.count(n) - rank(boundary_matrix(k, n, f));
  const std::size_t b = n == k.dim() ? 0 : rank(boundary_matrix(k, n + 1, f));
  return z - b;
}

Vector simplicial_coboundary(const Triangulation& k, int n, const Field& f, const Vector& cochain) {
  if (cochain.size() != k.count(n)) throw InputError("cochain has the wrong length");
  if (n == k.dim()) return {};
  return boundary_matrix(k, n + 1, f).apply_left(cochain);
}

bool is_cocycle(const Triangulation& k, int n, const Field& f, const Vector& cochain) {
  return is_zero(simplicial_coboundary(k, n, f, cochain));
}

std::vector<Vector> fundamental_cycles(const Triangulation& k, const Field& f) {
  const int top = k.dim();
  std::vector<Vector> out;
  const Matrix d = boundary_matrix(k, top, f);
  for (const auto& comp : k.components()) {
    Vector z(k.count(top), 0);
    if (f.characteristic() == 2) {
      for (std::size_t i : comp) z[i] = 1;
    } else {
      const auto ker = kernel_basis(d.select_columns(comp));
      if (ker.rank() == 0) throw DomainError("complex is non-orientable; a fundamental class needs characteristic 2");
      if (ker.rank() > 1) throw DomainError("top homology of a component has dimension above one");
      const Vector g = ker.basis.row(0);
      for (std::size_t i = 0; i < comp.size(); ++i) z[comp[i]] = g[i];
    }
    if (!is_zero(d.apply(z))) throw DomainError("complex is not closed: no fundamental cycle");
    out.push_back(std::move(z));
  }
  return out;
}

Vector fundamental_cycle(const Triangulation& k, const Field& f) {
  if (k.components().size() != 1) throw DomainError("complex is disconnected; use one fundamental cycle per component");
  return fundamental_cycles(k, f).front();
}

Vector class_coordinates(const Triangulation& k, const HomologyBasis& basis, const Field& f, const Vector& cochain) {
  if (!is_cocycle(k, basis.degree, f, cochain)) throw DomainError("cochain is not a cocycle");
  Vector out;
  for (const auto& z : basis.cycles) out.push_back(dot(f, cochain, z));
  return out;
}

}  // namespace hexcol
