#pragma once

#include <cstddef>
#include <map>
#include <random>

#include "complex/triangulation.hpp"
#include "limits/laurent.hpp"

namespace hexcol {

// Values rho_{ijk} of a 2-cochain on the triangles of the simplex 1..n
// (n = 4 or 5), required to satisfy the alternating relation on every
// tetrahedron. Then omega_{ijk} = 1 + o rho_{ijk}.
class CocycleData2 {
 public:
  // Throws InputError if the relation fails on some tetrahedron.
  CocycleData2(Field f, int vertices, std::map<Simplex, Elem> rho);
  static CocycleData2 tetrahedron(const Field& f, Elem r123, Elem r124, Elem r134, Elem r234);
  // delta of a random 1-cochain, redrawn until generic on every tetrahedron.
  static CocycleData2 random(const Field& f, int vertices, std::mt19937_64& rng);

  const Field& field() const { return field_; }
  int vertices() const { return vertices_; }
  Elem at(const Simplex& triangle) const;
  // rho read on tetrahedron t through 1..4 -> t[0]..t[3].
  Elem at(const Simplex& t, int a, int b, int c) const { return at({t[a - 1], t[b - 1], t[c - 1]}); }
  // rho_123 != rho_124 on t, so that A_2 exists.
  bool generic_on(const Simplex& t) const;
  bool generic() const;

 private:
  Field field_;
  int vertices_;
  std::map<Simplex, Elem> rho_;
};

// 6 x 2 nonconstant functionals of tetrahedron t (rows phi_12 .. phi_34).
LaurentMatrix nonconstant_functionals(const CocycleData2& rho, const Simplex& t = {1, 2, 3, 4});

LaurentMatrix a_o(const Field& f);
Matrix a_1(const CocycleData2& rho, const Simplex& t = {1, 2, 3, 4});
// Throws DomainError when rho_123 = rho_124 on t.
Matrix a_2(const CocycleData2& rho, const Simplex& t = {1, 2, 3, 4});

// Constant functionals of 1234 as a face of 12345 (sign +1).
Matrix constant_functionals(const Field& f);

struct LimitSteps {
  LaurentMatrix times_a_o;  // M A_o
  Matrix intermediate;      // its value at o = 0
  Matrix result;            // intermediate A_1 A_2
};

// Throws DomainError if M A_o keeps negative powers of o or A_2 is undefined.
LimitSteps limit_steps(const LaurentMatrix& m, const CocycleData2& rho, const Simplex& t = {1, 2, 3, 4});
Matrix limit_transform(const LaurentMatrix& m, const CocycleData2& rho, const Simplex& t = {1, 2, 3, 4});
// Multiplies by A_o A_1 A_2 first, then sets o = 0.
Matrix limit_one_shot(const LaurentMatrix& m, const CocycleData2& rho, const Simplex& t = {1, 2, 3, 4});

// The expected intermediate matrix with entries (0, rho_234 - rho_134; 1, ...).
Matrix expected_intermediate(const CocycleData2& rho, const Simplex& t = {1, 2, 3, 4});

// Pentachoron 12345 with the nonconstant functionals on each face (sign
// (-1)^(i+1) for the face opposite i). Colorings are transformed by the
// inverse of A_o A_1 A_2 on each tetrahedron, so the transformed permitted
// space is the kernel of the transformed functionals.
struct EdgeVectorLimitReport {
  bool functionals_match = false;     // transformed functionals at o = 0 equal the constant ones
  std::size_t nonconstant_dim = 0;    // dim of the nonconstant permitted space over F(o)
  std::size_t limit_dim = 0;          // dim of the kernel at o = 0
  bool psi_span_matches = false;      // that kernel is the span of the constant edge vectors
  bool pass = false;
};

EdgeVectorLimitReport edge_vector_limit_check(const CocycleData2& rho);

}  // namespace hexcol
