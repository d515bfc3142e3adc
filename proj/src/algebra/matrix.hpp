#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "algebra/field.hpp"

namespace hexcol {

using Vector = std::vector<Elem>;

struct RowEchelon;

// Dense matrix over a finite field. Over F_2 the rows are stored as packed
// 64-bit words; every other field uses one Elem per entry.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool packed() const { return packed_; }

  Elem at(std::size_t i, std::size_t j) const {
    if (packed_) return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
    return data_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Elem v);

  Vector row(std::size_t i) const;
  void set_row(std::size_t i, const Vector& v);
  void append_row(const Vector& v);
  void append_rows(const Matrix& other);
  void swap_rows(std::size_t a, std::size_t b);
  void resize_rows(std::size_t n);

  // row[dst] += c * other.row[src]
  void axpy_row(std::size_t dst, Elem c, const Matrix& other, std::size_t src);
  void scale_row(std::size_t i, Elem c);
  bool row_is_zero(std::size_t i) const;
  // Smallest column index with a nonzero entry in row i, or cols() if none.
  std::size_t leading_column(std::size_t i, std::size_t from = 0) const;

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> columns) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Vector apply(const Vector& v) const;        // M v
  Vector apply_left(const Vector& v) const;   // v^T M
  Matrix multiply(const Matrix& rhs) const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool packed_ = false;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> data_;

  friend struct RowEchelon;
  friend RowEchelon row_reduce(Matrix m);
};

// Reduced row echelon form: the nonzero rows only, pivots strictly increasing
// and always the smallest eligible column.
struct RowEchelon {
  Matrix basis;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(Matrix m);

// Basis of {v : M v = 0} in reduced row echelon form.
RowEchelon kernel_basis(const Matrix& m);

// One solution x of M x = b, if any exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::size_t rank(const Matrix& m);

Vector add(const Field& f, const Vector& a, const Vector& b);
Vector scale(const Field& f, Elem c, const Vector& a);
Elem dot(const Field& f, const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

}  // namespace hexcol
