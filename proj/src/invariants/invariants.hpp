#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coloring/coloring.hpp"
#include "hexagon/hexagon.hpp"
#include "homology/homology.hpp"

namespace hexcol {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

// Coloring sum_i X_i v_i over lifts v_1..v_d of the H_col basis (and a second
// copy in X'_1..X'_d for bilinear cochains, variables d..2d-1).
struct GenericColoring {
  std::vector<Vector> lifts;
  std::size_t d() const { return lifts.size(); }
};

// Value of c on the restriction of the coloring to each n-simplex of K, read
// through the order-preserving identification with Delta^n.
Vector chain_map(const Triangulation& k, const HexCochain& c, const Vector& coloring, const Vector* second = nullptr);
std::vector<MPoly> chain_map(const Triangulation& k, const HexCochain& c, const GenericColoring& g);

struct InvariantPolynomial {
  std::string name;       // "p3_1", "p4", "q", "r", ...
  int target_degree = 4;  // 3 or 4
  std::size_t component = 0;  // H^3 basis position, or connected component for degree 4
  bool bilinear = false;
  MPoly poly;

  std::size_t d() const { return bilinear ? poly.nvars() / 2 : poly.nvars(); }
  std::string to_string() const;  // in X1..Xd, X'1..X'd
};

std::vector<std::string> invariant_variable_names(std::size_t d, bool bilinear);

// g_col for the hexagon cocycle c, in the canonical H_col basis. Degree 3: one
// polynomial per H^3 basis element; degree 4: one per connected component.
std::vector<InvariantPolynomial> gcol(const Triangulation& k, const HexCochain& c, const std::string& name = "");
// Same with explicit lifts (used to test independence of the choice of lifts).
std::vector<InvariantPolynomial> gcol_with_lifts(const Triangulation& k, const HexCochain& c,
                                                 const GenericColoring& g, const std::string& name = "");

// Default names: c3_bilinear -> p3, c4_bilinear -> p4, c4_cubic_1 -> q, c4_cubic_2 -> r.
std::string invariant_name(const std::string& cocycle_name);

struct ValueDistribution {
  Field field;
  std::map<Elem, std::uint64_t> counts;  // only attained values

  std::uint64_t total() const;
  bool operator==(const ValueDistribution& o) const { return field == o.field && counts == o.counts; }
};

// Exhaustive counts over ext^{nvars}. The polynomial's field must be the prime
// field of ext (or ext itself). Throws ResourceError above the cap.
ValueDistribution value_distribution(const MPoly& p, const Field& ext, std::uint64_t cap = kDefaultEnumerationCap);

// d x d matrix B with p = sum B(i,j) X_i X'_j (p must have bidegree (1,1)).
Matrix bilinear_matrix(const MPoly& p);
std::size_t bilinear_rank(const MPoly& p);

struct EqualityReport {
  std::vector<InvariantPolynomial> q;
  std::vector<InvariantPolynomial> r;
  bool equal = false;
};

// Compares g_col of c4_cubic_1 and c4_cubic_2 in the same H_col basis (characteristic 2).
EqualityReport equality_report(const Triangulation& k, const Field& f);

}  // namespace hexcol
