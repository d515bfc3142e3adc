#include "algebra/matrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "common/errors.hpp"

namespace hexcol {

namespace {

inline std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

// dst[from..n) += c * src[from..n)
void axpy_elems(const Field& f, Elem* dst, const Elem* src, Elem c, std::size_t from, std::size_t n) {
  if (c == 0) return;
  if (f.is_prime()) {
    const std::uint64_t p = f.characteristic();
    for (std::size_t j = from; j < n; ++j)
      if (src[j]) dst[j] = static_cast<Elem>((dst[j] + std::uint64_t{c} * src[j]) % p);
    return;
  }
  for (std::size_t j = from; j < n; ++j)
    if (src[j]) dst[j] = f.add(dst[j], f.mul(c, src[j]));
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), packed_(field_.is_binary()) {
  if (packed_) {
    words_ = words_for(cols);
    bits_.assign(rows * words_, 0);
  } else {
    data_.assign(rows * cols, 0);
  }
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Elem v) {
  if (packed_) {
    auto& w = bits_[i * words_ + (j >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    if (v & 1u)
      w |= bit;
    else
      w &= ~bit;
  } else {
    data_[i * cols_ + j] = v;
  }
}

Vector Matrix::row(std::size_t i) const {
  Vector v(cols_);
  if (packed_) {
    const std::uint64_t* w = &bits_[i * words_];
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (w[j >> 6] >> (j & 63)) & 1u;
  } else {
    std::copy_n(&data_[i * cols_], cols_, v.begin());
  }
  return v;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (v.size() != cols_) throw InputError("row length mismatch");
  if (packed_) {
    std::uint64_t* w = &bits_[i * words_];
    std::fill_n(w, words_, 0);
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] & 1u) w[j >> 6] |= std::uint64_t{1} << (j & 63);
  } else {
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }
}

void Matrix::append_row(const Vector& v) {
  resize_rows(rows_ + 1);
  set_row(rows_ - 1, v);
}

void Matrix::append_rows(const Matrix& other) {
  if (other.cols_ != cols_ || other.field_ != field_) throw InputError("append_rows: shape mismatch");
  if (packed_) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  } else {
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  }
  rows_ += other.rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (packed_) {
    std::swap_ranges(bits_.begin() + static_cast<std::ptrdiff_t>(a * words_),
                     bits_.begin() + static_cast<std::ptrdiff_t>((a + 1) * words_),
                     bits_.begin() + static_cast<std::ptrdiff_t>(b * words_));
  } else {
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
  }
}

void Matrix::resize_rows(std::size_t n) {
  if (packed_)
    bits_.resize(n * words_, 0);
  else
    data_.resize(n * cols_, 0);
  rows_ = n;
}

void Matrix::axpy_row(std::size_t dst, Elem c, const Matrix& other, std::size_t src) {
  if (c == 0) return;
  if (packed_) {
    std::uint64_t* d = &bits_[dst * words_];
    const std::uint64_t* s = &other.bits_[src * other.words_];
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
  } else {
    axpy_elems(field_, &data_[dst * cols_], &other.data_[src * other.cols_], c, 0, cols_);
  }
}

void Matrix::scale_row(std::size_t i, Elem c) {
  if (packed_) {
    if ((c & 1u) == 0) std::fill_n(&bits_[i * words_], words_, 0);
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = field_.mul(c, data_[i * cols_ + j]);
}

bool Matrix::row_is_zero(std::size_t i) const { return leading_column(i) == cols_; }

std::size_t Matrix::leading_column(std::size_t i, std::size_t from) const {
  if (packed_) {
    const std::uint64_t* w = &bits_[i * words_];
    std::size_t wi = from >> 6;
    if (wi >= words_) return cols_;
    std::uint64_t cur = w[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return std::min(cols_, wi * 64 + static_cast<std::size_t>(std::countr_zero(cur)));
      if (++wi >= words_) return cols_;
      cur = w[wi];
    }
  }
  for (std::size_t j = from; j < cols_; ++j)
    if (data_[i * cols_ + j]) return j;
  return cols_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = leading_column(i); j < cols_; j = leading_column(i, j + 1)) t.set(j, i, at(i, j));
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix m(field_, rows_, columns.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const Elem v = at(i, columns[c]);
      if (v) m.set(i, c, v);
    }
  return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix m(field_, rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (packed_)
      std::copy_n(&bits_[rows[r] * words_], words_, &m.bits_[r * words_]);
    else
      std::copy_n(&data_[rows[r] * cols_], cols_, &m.data_[r * cols_]);
  }
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InputError("apply: dimension mismatch");
  Vector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (std::size_t j = leading_column(i); j < cols_; j = leading_column(i, j + 1))
      if (v[j]) acc = field_.add(acc, field_.mul(at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Vector Matrix::apply_left(const Vector& v) const {
  if (v.size() != rows_) throw InputError("apply_left: dimension mismatch");
  Vector out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!v[i]) continue;
    for (std::size_t j = leading_column(i); j < cols_; j = leading_column(i, j + 1))
      out[j] = field_.add(out[j], field_.mul(v[i], at(i, j)));
  }
  return out;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("multiply: dimension mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = leading_column(i); k < cols_; k = leading_column(i, k + 1))
      out.axpy_row(i, at(i, k), rhs, k);
  return out;
}

bool Matrix::is_zero() const {
  if (packed_) return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  return packed_ ? bits_ == o.bits_ : data_ == o.data_;
}

RowEchelon row_reduce(Matrix m) {
  const std::size_t rows = m.rows_, cols = m.cols_;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;

  if (m.packed_) {
    const std::size_t W = m.words_;
    std::uint64_t* bits = m.bits_.data();
    // forward elimination
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      const std::size_t wc = c >> 6;
      const std::uint64_t mask = std::uint64_t{1} << (c & 63);
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (bits[i * W + wc] & mask) {
          piv = i;
          break;
        }
      if (piv == rows) continue;
      m.swap_rows(piv, r);
      const std::uint64_t* pr = bits + r * W;
      for (std::size_t i = r + 1; i < rows; ++i) {
        std::uint64_t* ri = bits + i * W;
        if (ri[wc] & mask)
          for (std::size_t w = wc; w < W; ++w) ri[w] ^= pr[w];
      }
      pivots.push_back(c);
      ++r;
    }
    // back substitution
    for (std::size_t k = r; k-- > 0;) {
      const std::size_t c = pivots[k];
      const std::size_t wc = c >> 6;
      const std::uint64_t mask = std::uint64_t{1} << (c & 63);
      const std::uint64_t* pr = bits + k * W;
      for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t* ri = bits + i * W;
        if (ri[wc] & mask)
          for (std::size_t w = wc; w < W; ++w) ri[w] ^= pr[w];
      }
    }
  } else {
    const Field& f = m.field_;
    Elem* data = m.data_.data();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (data[i * cols + c]) {
          piv = i;
          break;
        }
      if (piv == rows) continue;
      m.swap_rows(piv, r);
      Elem* pr = data + r * cols;
      const Elem inv = f.inv(pr[c]);
      for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], inv);
      for (std::size_t i = r + 1; i < rows; ++i) {
        Elem* ri = data + i * cols;
        if (ri[c]) axpy_elems(f, ri, pr, f.neg(ri[c]), c, cols);
      }
      pivots.push_back(c);
      ++r;
    }
    for (std::size_t k = r; k-- > 0;) {
      const std::size_t c = pivots[k];
      const Elem* pr = data + k * cols;
      for (std::size_t i = 0; i < k; ++i) {
        Elem* ri = data + i * cols;
        if (ri[c]) axpy_elems(f, ri, pr, f.neg(ri[c]), c, cols);
      }
    }
  }
  m.resize_rows(r);
  return RowEchelon{std::move(m), std::move(pivots)};
}

RowEchelon kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  RowEchelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<std::size_t> free_index(cols, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::size_t nfree = 0;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) free_index[j] = nfree++;

  Matrix k(f, nfree, cols);
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) k.set(free_index[j], j, 1);
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const std::size_t p = e.pivots[i];
    for (std::size_t j = e.basis.leading_column(i, p + 1); j < cols; j = e.basis.leading_column(i, j + 1))
      k.set(free_index[j], p, f.neg(e.basis.at(i, j)));
  }
  return row_reduce(std::move(k));
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve: dimension mismatch");
  const Field& f = m.field();
  const std::size_t n = m.cols();
  Matrix aug(f, m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = m.leading_column(i); j < n; j = m.leading_column(i, j + 1)) aug.set(i, j, m.at(i, j));
    aug.set(i, n, b[i]);
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (e.rank() > 0 && e.pivots.back() == n) return std::nullopt;
  Vector x(n, 0);
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.basis.at(i, n);
  return x;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Vector add(const Field& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vector scale(const Field& f, Elem c, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

Elem dot(const Field& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

}  // namespace hexcol
