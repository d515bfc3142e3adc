#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra/mpoly.hpp"
#include "algebra/subspace.hpp"
#include "complex/triangulation.hpp"

namespace hexcol {

// Permitted colorings of the standard simplex 1..(n+1). Ambient variables are
// x_t, y_t for the tetrahedra t in lexicographic order (index 2t, 2t+1); the
// canonical coordinates are the non-pivot ambient variables of the reduced
// constraint system.
class StandardColorings {
 public:
  // Cached per (n, field); n >= 3.
  static const StandardColorings& get(int n, const Field& f);

  int level() const { return level_; }
  const Field& field() const { return space_.field(); }
  const Triangulation& simplex() const { return simplex_; }
  const Subspace& space() const { return space_; }
  std::size_t ambient_dim() const { return 2 * simplex_.count(3); }
  std::size_t dim() const { return free_.size(); }
  // Ambient index of each canonical coordinate.
  const std::vector<std::size_t>& free_variables() const { return free_; }
  // ambient_dim x dim: ambient coloring = P * canonical coordinates.
  const Matrix& parametrization() const { return param_; }
  // dim x dim(level+1) matrix of the k-th face map (k = 1..level+2): canonical
  // coordinates of this level expressed in those of level + 1.
  const Matrix& face_map(int k) const;

  std::size_t ambient_index(bool y, const Simplex& tetra) const;
  std::string ambient_name(std::size_t index, bool primed = false) const;  // "x[1234]", "y'[2345]"
  std::vector<std::string> canonical_names(bool bilinear) const;

 private:
  StandardColorings(int n, const Field& f);

  int level_;
  Triangulation simplex_;
  Subspace space_;
  std::vector<std::size_t> free_;
  Matrix param_;
  mutable std::vector<std::optional<Matrix>> faces_;
};

enum class CochainKind { polynomial, bilinear };

std::string to_string(CochainKind kind);
CochainKind parse_kind(const std::string& s);

// Hexagon n-cochain in canonical form: an MPoly in the canonical coordinates
// of V_{Delta^n} (bilinear: first copy then a primed copy, every term of
// bidegree (1,1)).
class HexCochain {
 public:
  HexCochain(int level, CochainKind kind, MPoly canonical);
  static HexCochain zero(int level, CochainKind kind, const Field& f);
  static HexCochain constant(int level, const Field& f, Elem c);

  int level() const { return level_; }
  CochainKind kind() const { return kind_; }
  bool bilinear() const { return kind_ == CochainKind::bilinear; }
  const MPoly& poly() const { return poly_; }
  const Field& field() const { return poly_.field(); }
  bool is_zero() const { return poly_.is_zero(); }
  int degree() const { return poly_.total_degree(); }

  HexCochain operator+(const HexCochain& o) const;
  HexCochain operator-(const HexCochain& o) const;
  HexCochain scaled(Elem c) const;
  bool operator==(const HexCochain& o) const {
    return level_ == o.level_ && kind_ == o.kind_ && poly_ == o.poly_;
  }
  bool operator!=(const HexCochain& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  int level_;
  CochainKind kind_;
  MPoly poly_;
};

// `ambient` is an MPoly in the ambient variables of Delta^n (bilinear: twice
// as many, primed copy second).
HexCochain ambient_to_canonical(int level, CochainKind kind, const MPoly& ambient);

// Alternating sum of the face pullbacks, restricted to V_{Delta^{n+1}}.
HexCochain coboundary(const HexCochain& c);
bool is_cocycle(const HexCochain& c);

// Value of the cochain on a permitted coloring of Delta^n given in ambient
// coordinates (bilinear: two colorings).
Elem evaluate(const HexCochain& c, const Vector& coloring, const Vector* second = nullptr);

// Builtins: c3_bilinear, c4_bilinear, c4_cubic_1, c4_cubic_2 (the cubic pair
// needs characteristic 2). Each is verified to be a cocycle on construction.
HexCochain builtin_cocycle(const std::string& name, const Field& f);
std::vector<std::string> builtin_cocycle_names();

// Converts an ambient polynomial written in the alternative tetrahedron basis
// (x~, y~) = (-x + y, x) into a canonical cochain in the (x, y) basis.
HexCochain from_tilde_basis(int level, CochainKind kind, const MPoly& ambient_tilde);

// Cochain literals, e.g. "- x[1234]*y'[1235] + y[2345]^2". See
// docs/cochain-literals.md. The level defaults to the largest vertex label
// minus one (at least 3); the kind defaults to bilinear iff a primed variable
// occurs.
HexCochain parse_cochain(const std::string& text, const Field& f, std::optional<int> level = std::nullopt,
                         std::optional<CochainKind> kind = std::nullopt);

}  // namespace hexcol
