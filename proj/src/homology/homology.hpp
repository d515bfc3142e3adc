#pragma once

#include <cstddef>
#include <vector>

#include "algebra/subspace.hpp"
#include "complex/triangulation.hpp"

namespace hexcol {

// N_{n-1} x N_n; the column of an n-simplex is sum_m (-1)^m [its face without
// the m-th vertex], m 0-based.
Matrix boundary_matrix(const Triangulation& k, int n, const Field& f);

// Cycle representatives of H_n together with cocycles dual to them, so the
// coordinates of a cohomology class are its values on the cycles.
struct HomologyBasis {
  int degree = 0;
  std::vector<Vector> cycles;
  std::vector<Vector> cocycles;  // cocycles[j] evaluates to 1 on cycles[j], 0 on the others

  std::size_t dim() const { return cycles.size(); }
};

HomologyBasis homology_basis(const Triangulation& k, int n, const Field& f);

std::size_t betti(const Triangulation& k, int n, const Field& f);

// delta c = 0 for an n-cochain c.
bool is_cocycle(const Triangulation& k, int n, const Field& f, const Vector& cochain);
Vector simplicial_coboundary(const Triangulation& k, int n, const Field& f, const Vector& cochain);

// Generator of the top homology of a closed connected complex. Throws
// DomainError when the complex is disconnected, or non-orientable with odd
// characteristic.
Vector fundamental_cycle(const Triangulation& k, const Field& f);
// One fundamental cycle per connected component (same length as the facet list).
std::vector<Vector> fundamental_cycles(const Triangulation& k, const Field& f);

// Values of the cocycle on the basis cycles. Throws DomainError if it is not a cocycle.
Vector class_coordinates(const Triangulation& k, const HomologyBasis& basis, const Field& f, const Vector& cochain);

}  // namespace hexcol
