#pragma once

#include <cstddef>
#include <vector>

#include "algebra/matrix.hpp"

namespace hexcol {

// Linear subspace of F^m held in canonical form: its reduced row echelon
// basis. Two Subspaces compare equal iff they are the same subspace.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient);  // zero subspace

  static Subspace span(const Matrix& rows);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace kernel(const Matrix& m);  // {v : m v = 0}
  static Subspace whole(Field field, std::size_t ambient);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  // v minus its component along this subspace's pivots; zero iff v lies in it.
  Vector reduce(Vector v) const;
  // Reduces every row of m in place.
  void reduce_rows(Matrix& m) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  // Coefficients of v in the RREF basis (v must lie in the subspace).
  Vector coordinates(const Vector& v) const;

  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return pivots_ == o.pivots_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  explicit Subspace(RowEchelon e);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// W / W0 for W0 ⊆ W. The coset representatives are the canonical complement:
// W reduced modulo W0's pivots, brought to RREF. They depend only on the pair
// of subspaces, not on how either was produced.
class QuotientSpace {
 public:
  QuotientSpace(Subspace ambient, Subspace sub);

  const Subspace& ambient() const { return ambient_; }
  const Subspace& sub() const { return sub_; }
  std::size_t dim() const { return complement_.dim(); }
  const Subspace& complement() const { return complement_; }

  // i-th coset representative (a vector of W)
  Vector representative(std::size_t i) const { return complement_.basis_vector(i); }
  std::vector<Vector> representatives() const;

  // Coordinates of v + W0 in the representative basis. Throws if v ∉ W.
  Vector coordinates(const Vector& v) const;

 private:
  Subspace ambient_;
  Subspace sub_;
  Subspace complement_;
};

}  // namespace hexcol
