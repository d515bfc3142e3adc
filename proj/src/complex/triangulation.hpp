#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hexcol {

// Strictly increasing list of 1-based vertex numbers.
using Simplex = std::vector<int>;

// All faces of s with k+1 vertices, in lexicographic order.
std::vector<Simplex> faces_of(const Simplex& s, int k);
// s with its m-th vertex (0-based position) removed.
Simplex drop_vertex(const Simplex& s, std::size_t m);
bool is_face_of(const Simplex& face, const Simplex& s);
std::string simplex_label(const Simplex& s);  // "1234" or "1.12.30" when a label has several digits

// Pure ordered simplicial complex given by its facets. Every face of every
// dimension is indexed in lexicographic order; the object is immutable.
class Triangulation {
 public:
  // Sorts each facet; rejects repeated vertices, duplicate facets, mixed
  // dimensions and labels outside 1..num_vertices.
  Triangulation(int num_vertices, std::vector<Simplex> facets);

  // The standard simplex 1..(n+1) with all of its faces.
  static Triangulation standard_simplex(int n);
  // Boundary of the standard simplex 1..(n+2), an n-sphere.
  static Triangulation simplex_boundary(int n);

  int num_vertices() const { return num_vertices_; }
  int dim() const { return dim_; }
  const std::vector<Simplex>& facets() const { return simplices_[dim_]; }
  const std::vector<Simplex>& simplices(int n) const;
  std::size_t count(int n) const { return simplices(n).size(); }
  std::vector<std::size_t> f_vector() const;
  long long euler_characteristic() const;

  std::optional<std::size_t> find(const Simplex& s) const;
  std::size_t index_of(const Simplex& s) const;  // throws if absent
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  // For each n-simplex, the indices of the (n+1)-simplices containing it.
  const std::vector<std::vector<std::size_t>>& cofaces(int n) const;

  // Facets containing s.
  std::vector<std::size_t> star_facets(const Simplex& s) const;

  // Facet groups of the connected components (facets sharing a vertex).
  std::vector<std::vector<std::size_t>> components() const;

  bool operator==(const Triangulation& o) const {
    return num_vertices_ == o.num_vertices_ && dim_ == o.dim_ && simplices_[dim_] == o.simplices_[o.dim_];
  }
  bool operator!=(const Triangulation& o) const { return !(*this == o); }

 private:
  int num_vertices_ = 0;
  int dim_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<std::vector<std::vector<std::size_t>>> cofaces_;
};

struct ClosedReport {
  bool passed = true;
  std::vector<std::string> failures;  // human-readable, one per offending simplex
};

// Closed pseudomanifold check: every ridge lies in exactly two facets, and the
// link of every face of codimension at least two is connected.
ClosedReport validate_closed(const Triangulation& t);

struct LinkComplex {
  Triangulation complex;       // vertices renumbered 1..n preserving order
  std::vector<int> labels;     // labels[i-1] = original vertex of new vertex i
};

LinkComplex link(const Triangulation& t, const Simplex& b);

// Staircase triangulation of |a| x |b|. Vertex (i, j) becomes (i-1)*N0(b) + j.
Triangulation staircase_product(const Triangulation& a, const Triangulation& b);

// Same complex with vertices renumbered order-preservingly onto 1..n,
// dropping unused numbers.
Triangulation compactify(const Triangulation& t);

}  // namespace hexcol
