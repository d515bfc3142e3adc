#pragma once

#include <array>
#include <cstddef>

#include "algebra/subspace.hpp"
#include "complex/triangulation.hpp"

namespace hexcol {

// Integer 1x2 or 2x1 block with entries in {-1, 0, 1}; map into a field with
// Field::from_int.
using Block = std::array<int, 2>;

// Position (0..5) of the edge among k1k2, k1k3, k1k4, k2k3, k2k4, k3k4 of t.
std::size_t edge_position(const Simplex& t, const Simplex& edge);

// t-component of the edge functional phi_edge of pentachoron u.
Block edge_functional_block(const Simplex& u, const Simplex& edge, const Simplex& t);

// t-component of the edge vector psi_edge (no sign factor).
Block edge_vector_block(const Simplex& t, const Simplex& edge);

// Colorings live in F^{2 N3}: tetrahedron t (index order of K) owns
// coordinates 2t (x_t) and 2t+1 (y_t).
std::size_t x_index(std::size_t tetra);
std::size_t y_index(std::size_t tetra);

Vector edge_vector(const Triangulation& k, const Field& f, const Simplex& edge);

// 10 N4 x 2 N3: row 10u + e is phi of the e-th edge (lex) of pentachoron u.
Matrix functional_matrix(const Triangulation& k, const Field& f);
// N1 x 2 N3: row b is psi_b.
Matrix edge_vector_matrix(const Triangulation& k, const Field& f);

// V_K: colorings annihilated by every edge functional of every pentachoron.
Subspace permitted_space(const Triangulation& k, const Field& f);
// V_K^(0): span of all edge vectors.
Subspace edge_generated_space(const Triangulation& k, const Field& f);

bool is_permitted(const Triangulation& k, const Field& f, const Vector& coloring);

class ColoringHomology {
 public:
  ColoringHomology(Subspace permitted, Subspace edge_generated);

  std::size_t d() const { return quotient_.dim(); }
  const QuotientSpace& quotient() const { return quotient_; }
  const Subspace& permitted() const { return quotient_.ambient(); }
  const Subspace& edge_generated() const { return quotient_.sub(); }
  // Lifts v_1..v_d of the canonical coset basis.
  std::vector<Vector> lifts() const { return quotient_.representatives(); }

 private:
  QuotientSpace quotient_;
};

ColoringHomology coloring_homology(const Triangulation& k, const Field& f);

}  // namespace hexcol
