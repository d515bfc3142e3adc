#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "algebra/matrix.hpp"

namespace hexcol {

using Monomial = std::vector<std::uint16_t>;

// Graded lexicographic order: total degree first, then the exponent of the
// first variable, then the second, ...
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

unsigned monomial_degree(const Monomial& m);

// Sparse multivariate polynomial with formal semantics: over F_2, x and x^2
// are different polynomials.
class MPoly {
 public:
  using Terms = std::map<Monomial, Elem, GrlexLess>;

  MPoly(Field field, std::size_t nvars);
  static MPoly constant(Field field, std::size_t nvars, Elem c);
  static MPoly variable(Field field, std::size_t nvars, std::size_t i);
  static MPoly monomial(Field field, Monomial m, Elem c = 1);
  // sum_i coeffs[i] * x_i
  static MPoly linear(Field field, const Vector& coeffs);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // -1 for the zero polynomial
  int total_degree() const;
  // Largest total degree in the variables [first, first + count).
  int degree_in(std::size_t first, std::size_t count) const;
  bool is_homogeneous() const;

  Elem coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, Elem c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(Elem c) const;
  MPoly pow(unsigned e) const;

  // x_i <- sum_j L(i, j) y_j (+ shift_i). L has nvars() rows.
  MPoly substitute_linear(const Matrix& L, const Vector* shift = nullptr) const;
  // x_i <- images[i]; all images share one variable count.
  MPoly substitute(const std::vector<MPoly>& images) const;

  Elem evaluate(std::span<const Elem> point) const;
  // Evaluates over an extension of the coefficient field's prime field. The
  // coefficient field must be prime with the same characteristic.
  Elem evaluate_in(const Field& ext, std::span<const Elem> point) const;

  MPoly homogeneous_part(unsigned degree) const;
  // Same polynomial viewed in a larger ring (new variables appended).
  MPoly extended(std::size_t nvars) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;  // x1, x2, ...

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t nvars_;
  Terms terms_;
};

// Monomials of exact total degree `degree` in `nvars` variables, in ascending
// graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

std::string format_coefficient(const Field& f, Elem c, bool& negative);

}  // namespace hexcol
