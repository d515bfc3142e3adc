#include "limits/laurent.hpp"

#include <stdexcept>

#include "common/errors.hpp"

namespace hexcol {

Laurent Laurent::monomial(const Field& f, Elem c, int exponent) {
  Laurent out(f);
  if (c) {
    out.low_ = exponent;
    out.coeffs_ = {c};
  }
  return out;
}

void Laurent::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  low_ += static_cast<int>(lead);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

int Laurent::low() const { return low_; }
int Laurent::high() const { return is_zero() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }

Elem Laurent::coeff(int e) const {
  if (is_zero() || e < low_ || e > high()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

Elem Laurent::at_zero() const {
  if (has_negative_powers()) throw DomainError("limit at o = 0 undefined: " + to_string() + " has negative powers");
  return coeff(0);
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Laurent out(field_);
  out.low_ = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  out.coeffs_.assign(static_cast<std::size_t>(hi - out.low_ + 1), 0);
  for (int e = out.low_; e <= hi; ++e) out.coeffs_[e - out.low_] = field_.add(coeff(e), o.coeff(e));
  out.normalize();
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& c : out.coeffs_) c = field_.neg(c);
  return out;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent out(field_);
  if (is_zero() || o.is_zero()) return out;
  out.low_ = low_ + o.low_;
  out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out.coeffs_[i + j] = field_.add(out.coeffs_[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
  out.normalize();
  return out;
}

Laurent Laurent::divide_exact(const Laurent& o) const {
  if (o.is_zero()) throw std::logic_error("division by the zero Laurent polynomial");
  Laurent rem = *this;
  Laurent q(field_);
  const Elem lead_inv = field_.inv(o.coeffs_.back());
  while (!rem.is_zero()) {
    const int shift = rem.high() - o.high();
    if (shift + o.low() < rem.low()) throw std::logic_error("Laurent division is not exact");
    const Laurent t = monomial(field_, field_.mul(rem.coeffs_.back(), lead_inv), shift);
    q = q + t;
    rem = rem - t * o;
  }
  return q;
}

std::string Laurent::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = high(); e >= low_; --e) {
    const Elem c = coeff(e);
    if (!c) continue;
    if (!s.empty()) s += " + ";
    const bool bare = e != 0 && c == 1;
    if (!bare) s += field_.format(c);
    if (e != 0) {
      if (!bare) s += "*";
      s += var;
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

LaurentMatrix::LaurentMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Laurent(f)) {}

LaurentMatrix LaurentMatrix::from(const Matrix& m) {
  LaurentMatrix out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, Laurent::constant(m.field(), m.at(i, j)));
  return out;
}

LaurentMatrix LaurentMatrix::multiply(const LaurentMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("Laurent matrix shapes do not match");
  LaurentMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      Laurent acc(field_);
      for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * rhs.at(k, j);
      out.set(i, j, acc);
    }
  return out;
}

bool LaurentMatrix::has_negative_powers() const {
  for (const auto& e : data_)
    if (e.has_negative_powers()) return true;
  return false;
}

Matrix LaurentMatrix::at_zero() const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j).at_zero());
  return out;
}

std::size_t LaurentMatrix::generic_rank() const {
  // Fraction-free elimination: every division below is exact over F[o, 1/o].
  std::vector<Laurent> a = data_;
  auto el = [&](std::size_t i, std::size_t j) -> Laurent& { return a[i * cols_ + j]; };
  Laurent prev = Laurent::constant(field_, 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && el(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(el(p, j), el(r, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      for (std::size_t j = c + 1; j < cols_; ++j)
        el(i, j) = (el(r, c) * el(i, j) - el(i, c) * el(r, j)).divide_exact(prev);
      el(i, c) = Laurent(field_);
    }
    prev = el(r, c);
    ++r;
  }
  return r;
}

}  // namespace hexcol
