#include "coloring/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "common/errors.hpp"

namespace hexcol {

namespace {

constexpr Block kFunctionalTable[6] = {{0, 1}, {1, -1}, {-1, 0}, {-1, 0}, {1, 1}, {0, -1}};
constexpr Block kVectorTable[6] = {{1, 0}, {-1, 1}, {0, -1}, {0, -1}, {1, 1}, {-1, 0}};

std::vector<Simplex> pentachora_of(const Triangulation& k) {
  return k.dim() >= 4 ? k.simplices(4) : std::vector<Simplex>{};
}

}  // namespace

std::size_t edge_position(const Simplex& t, const Simplex& edge) {
  if (t.size() != 4 || edge.size() != 2 || !is_face_of(edge, t))
    throw InputError("edge " + simplex_label(edge) + " is not an edge of tetrahedron " + simplex_label(t));
  const auto a = std::find(t.begin(), t.end(), edge[0]) - t.begin();
  const auto b = std::find(t.begin(), t.end(), edge[1]) - t.begin();
  static constexpr int kPos[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return static_cast<std::size_t>(kPos[a][b]);
}

Block edge_functional_block(const Simplex& u, const Simplex& edge, const Simplex& t) {
  if (u.size() != 5 || t.size() != 4 || !is_face_of(t, u))
    throw InputError("tetrahedron " + simplex_label(t) + " is not a face of pentachoron " + simplex_label(u));
  const std::size_t pos = edge_position(t, edge);
  std::size_t opposite = 0;
  while (opposite < 4 && u[opposite] == t[opposite]) ++opposite;
  // opposite is 0-based, so the sign (-1)^{i+1} with 1-based i is (-1)^opposite
  const int sign = opposite % 2 == 0 ? 1 : -1;
  const Block& row = kFunctionalTable[pos];
  return {sign * row[0], sign * row[1]};
}

Block edge_vector_block(const Simplex& t, const Simplex& edge) { return kVectorTable[edge_position(t, edge)]; }

std::size_t x_index(std::size_t tetra) { return 2 * tetra; }
std::size_t y_index(std::size_t tetra) { return 2 * tetra + 1; }

Vector edge_vector(const Triangulation& k, const Field& f, const Simplex& edge) {
  if (edge.size() != 2 || !k.contains(edge)) throw InputError("edge " + simplex_label(edge) + " is not in the complex");
  Vector v(2 * k.count(3), 0);
  const auto e = k.index_of(edge);
  for (std::size_t tri : k.cofaces(1)[e])
    for (std::size_t t : k.cofaces(2)[tri]) {
      // each tetrahedron is reached twice (via two triangles); assignment is idempotent
      const Block b = edge_vector_block(k.simplices(3)[t], edge);
      v[x_index(t)] = f.from_int(b[0]);
      v[y_index(t)] = f.from_int(b[1]);
    }
  return v;
}

Matrix functional_matrix(const Triangulation& k, const Field& f) {
  const auto pentachora = pentachora_of(k);
  const std::size_t cols = k.dim() >= 3 ? 2 * k.count(3) : 0;
  Matrix m(f, 10 * pentachora.size(), cols);
  for (std::size_t ui = 0; ui < pentachora.size(); ++ui) {
    const Simplex& u = pentachora[ui];
    const auto edges = faces_of(u, 1);
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
      for (std::size_t m_drop = 0; m_drop < 5; ++m_drop) {
        if (u[m_drop] == edges[ei][0] || u[m_drop] == edges[ei][1]) continue;
        const Simplex t = drop_vertex(u, m_drop);
        const std::size_t ti = k.index_of(t);
        const Block b = edge_functional_block(u, edges[ei], t);
        m.set(10 * ui + ei, x_index(ti), f.from_int(b[0]));
        m.set(10 * ui + ei, y_index(ti), f.from_int(b[1]));
      }
    }
  }
  return m;
}

Matrix edge_vector_matrix(const Triangulation& k, const Field& f) {
  const std::size_t cols = k.dim() >= 3 ? 2 * k.count(3) : 0;
  Matrix m(f, k.dim() >= 1 ? k.count(1) : 0, cols);
  if (k.dim() < 3) return m;
  for (std::size_t ti = 0; ti < k.count(3); ++ti) {
    const Simplex& t = k.simplices(3)[ti];
    for (const auto& edge : faces_of(t, 1)) {
      const Block b = edge_vector_block(t, edge);
      const std::size_t row = k.index_of(edge);
      m.set(row, x_index(ti), f.from_int(b[0]));
      m.set(row, y_index(ti), f.from_int(b[1]));
    }
  }
  return m;
}

Subspace permitted_space(const Triangulation& k, const Field& f) { return Subspace::kernel(functional_matrix(k, f)); }

Subspace edge_generated_space(const Triangulation& k, const Field& f) {
  return Subspace::span(edge_vector_matrix(k, f));
}

bool is_permitted(const Triangulation& k, const Field& f, const Vector& coloring) {
  if (coloring.size() != 2 * k.count(3)) throw InputError("coloring has the wrong length");
  return is_zero(functional_matrix(k, f).apply(coloring));
}

ColoringHomology::ColoringHomology(Subspace permitted, Subspace edge_generated)
    : quotient_(std::move(permitted), std::move(edge_generated)) {}

ColoringHomology coloring_homology(const Triangulation& k, const Field& f) {
  Subspace v = permitted_space(k, f);
  Subspace v0 = edge_generated_space(k, f);
  if (!v.contains(v0)) throw std::logic_error("edge vectors are not permitted colorings");
  return ColoringHomology(std::move(v), std::move(v0));
}

}  // namespace hexcol
