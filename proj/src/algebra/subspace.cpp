#include "algebra/subspace.hpp"

#include <stdexcept>
#include <utility>

#include "common/errors.hpp"

namespace hexcol {

Subspace::Subspace(Field field, std::size_t ambient) : basis_(std::move(field), 0, ambient) {}

Subspace::Subspace(RowEchelon e) : basis_(std::move(e.basis)), pivots_(std::move(e.pivots)) {}

Subspace Subspace::span(const Matrix& rows) { return Subspace(row_reduce(rows)); }

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
  return span(Matrix::from_rows(std::move(field), ambient, vectors));
}

Subspace Subspace::kernel(const Matrix& m) { return Subspace(kernel_basis(m)); }

Subspace Subspace::whole(Field field, std::size_t ambient) {
  return span(Matrix::identity(std::move(field), ambient));
}

void Subspace::reduce_rows(Matrix& m) const {
  if (m.cols() != ambient_dim()) throw InputError("reduce: ambient dimension mismatch");
  const Field& f = field();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const Elem c = m.at(i, pivots_[k]);
      if (c) m.axpy_row(i, f.neg(c), basis_, k);
    }
}

Vector Subspace::reduce(Vector v) const {
  Matrix m = Matrix::from_rows(field(), ambient_dim(), {v});
  reduce_rows(m);
  return m.row(0);
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  Matrix m = other.basis_;
  reduce_rows(m);
  return m.is_zero();
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw DomainError("vector does not lie in the subspace");
  Vector c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  Matrix m = basis_;
  m.append_rows(other.basis_);
  return span(m);
}

QuotientSpace::QuotientSpace(Subspace ambient, Subspace sub)
    : ambient_(std::move(ambient)), sub_(std::move(sub)), complement_(ambient_.field(), ambient_.ambient_dim()) {
  if (!ambient_.contains(sub_)) throw std::logic_error("quotient: sub-space is not contained in the ambient space");
  Matrix reduced = ambient_.basis();
  sub_.reduce_rows(reduced);
  complement_ = Subspace::span(reduced);
  if (complement_.dim() + sub_.dim() != ambient_.dim())
    throw std::logic_error("quotient: inconsistent dimensions");
}

std::vector<Vector> QuotientSpace::representatives() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(representative(i));
  return out;
}

Vector QuotientSpace::coordinates(const Vector& v) const {
  if (!ambient_.contains(v)) throw DomainError("vector does not lie in the ambient space of the quotient");
  const Vector r = sub_.reduce(v);
  Vector c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = r[complement_.pivots()[k]];
  return c;
}

}  // namespace hexcol
