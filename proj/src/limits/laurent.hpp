#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "algebra/matrix.hpp"

namespace hexcol {

// Finite Laurent polynomial sum_e c_e o^e over F.
class Laurent {
 public:
  explicit Laurent(Field f) : field_(std::move(f)) {}
  static Laurent constant(const Field& f, Elem c) { return monomial(f, c, 0); }
  static Laurent monomial(const Field& f, Elem c, int exponent);

  const Field& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int low() const;   // smallest exponent with nonzero coefficient (zero polynomial: 0)
  int high() const;  // largest
  Elem coeff(int exponent) const;
  bool has_negative_powers() const { return !is_zero() && low_ < 0; }
  // Value at o = 0; throws DomainError if negative powers remain.
  Elem at_zero() const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  // Exact division; throws std::logic_error if o does not divide this.
  Laurent divide_exact(const Laurent& o) const;
  bool operator==(const Laurent& o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "o") const;

 private:
  void normalize();

  Field field_;
  int low_ = 0;
  std::vector<Elem> coeffs_;  // coeffs_[i] belongs to o^(low_ + i)
};

class LaurentMatrix {
 public:
  LaurentMatrix(Field f, std::size_t rows, std::size_t cols);
  static LaurentMatrix from(const Matrix& m);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Laurent& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Laurent v) { data_[i * cols_ + j] = std::move(v); }

  LaurentMatrix multiply(const LaurentMatrix& rhs) const;
  LaurentMatrix multiply(const Matrix& rhs) const { return multiply(from(rhs)); }
  bool has_negative_powers() const;
  // Entrywise o = 0; throws DomainError if any entry has negative powers.
  Matrix at_zero() const;
  // Rank over the rational function field F(o).
  std::size_t generic_rank() const;

  bool operator==(const LaurentMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator!=(const LaurentMatrix& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Laurent> data_;
};

}  // namespace hexcol
