#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hexagon/hexagon.hpp"

namespace hexcol {

inline constexpr std::size_t kDefaultSearchCap = 200000;

// Cohomology of the hexagon complex at one homogeneous degree (bilinear kind:
// the single bidegree (1,1), reported as degree 2).
struct HexCohomologyPiece {
  unsigned degree = 0;
  std::vector<Monomial> monomials;  // coordinates of level-n cochains of this degree
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  QuotientSpace classes;

  std::size_t cohomology() const { return classes.dim(); }
};

struct HexCohomologyReport {
  int level = 3;
  unsigned max_degree = 0;
  CochainKind kind = CochainKind::polynomial;
  Field field;
  std::vector<HexCohomologyPiece> pieces;  // ascending degree

  // Cocycles of degree exactly D modulo coboundaries of degree exactly D.
  const HexCohomologyPiece& top() const { return pieces.back(); }
  // All degrees <= D together (delta preserves degree, so this is a direct sum).
  std::size_t total_cocycles() const;
  std::size_t total_coboundaries() const;
  std::size_t total_cohomology() const;

  // Canonical coset representatives of every piece.
  std::vector<HexCochain> representatives() const;
  // Coordinates of a cocycle's class (pieces concatenated). Throws DomainError
  // if c is not a cocycle or has terms of degree above D.
  Vector class_coordinates(const HexCochain& c) const;
  bool independent(const std::vector<HexCochain>& cocycles) const;
};

HexCohomologyReport hex_cohomology(int level, unsigned max_degree, const Field& f, CochainKind kind,
                                   std::size_t cap = kDefaultSearchCap);

}  // namespace hexcol
