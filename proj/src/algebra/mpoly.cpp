#include "algebra/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "common/errors.hpp"

namespace hexcol {

unsigned monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  // larger exponent of an earlier variable ranks higher
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

MPoly::MPoly(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

MPoly MPoly::constant(Field field, std::size_t nvars, Elem c) {
  MPoly p(std::move(field), nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(Field field, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InputError("variable index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  return monomial(std::move(field), std::move(m), 1);
}

MPoly MPoly::monomial(Field field, Monomial m, Elem c) {
  MPoly p(std::move(field), m.size());
  p.add_term(m, c);
  return p;
}

MPoly MPoly::linear(Field field, const Vector& coeffs) {
  MPoly p(field, coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i]) continue;
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.terms_.emplace(std::move(m), coeffs[i]);
  }
  return p;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(monomial_degree(terms_.rbegin()->first));
}

int MPoly::degree_in(std::size_t first, std::size_t count) const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (std::size_t i = first; i < first + count && i < m.size(); ++i) d += m[i];
    best = std::max(best, d);
  }
  return best;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return monomial_degree(terms_.begin()->first) == monomial_degree(terms_.rbegin()->first);
}

Elem MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void MPoly::add_term(const Monomial& m, Elem c) {
  if (m.size() != nvars_) throw InputError("monomial length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_ || o.field_ != field_) throw InputError("polynomial ring mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_ || o.field_ != field_) throw InputError("polynomial ring mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly MPoly::operator-() const { return scaled(field_.neg(1)); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (o.nvars_ != nvars_ || o.field_ != field_) throw InputError("polynomial ring mismatch");
  MPoly r(field_, nvars_);
  Monomial prod(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) prod[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      r.add_term(prod, field_.mul(ca, cb));
    }
  return r;
}

MPoly MPoly::scaled(Elem c) const {
  MPoly r(field_, nvars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, field_.mul(c, v));
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(field_, nvars_, 1);
  MPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MPoly MPoly::substitute_linear(const Matrix& L, const Vector* shift) const {
  if (L.rows() != nvars_) throw InputError("substitution matrix has wrong number of rows");
  if (L.field() != field_) throw InputError("substitution matrix over a different field");
  if (shift && shift->size() != nvars_) throw InputError("shift vector has wrong length");
  std::vector<MPoly> images;
  images.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    MPoly img = linear(field_, L.row(i));
    if (shift && (*shift)[i]) img.add_term(Monomial(L.cols(), 0), (*shift)[i]);
    images.push_back(std::move(img));
  }
  if (nvars_ == 0) {
    MPoly r(field_, L.cols());
    for (const auto& [m, c] : terms_) r.add_term(Monomial(L.cols(), 0), c);
    return r;
  }
  return substitute(images);
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != nvars_) throw InputError("substitution needs one image per variable");
  if (nvars_ == 0) throw InputError("substitute: use substitute_linear for constant polynomials");
  const std::size_t m = images.front().nvars();
  // cache powers of each image
  std::vector<std::vector<MPoly>> powers(nvars_);
  MPoly result(field_, m);
  for (const auto& [mono, c] : terms_) {
    MPoly term = constant(field_, m, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!mono[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(images[i]);
      while (pw.size() < mono[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[mono[i] - 1];
    }
    result += term;
  }
  return result;
}

Elem MPoly::evaluate(std::span<const Elem> point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong length");
  Elem acc = 0;
  for (const auto& [m, c] : terms_) {
    Elem t = c;
    for (std::size_t i = 0; i < nvars_ && t; ++i)
      if (m[i]) t = field_.mul(t, field_.pow(point[i], m[i]));
    acc = field_.add(acc, t);
  }
  return acc;
}

Elem MPoly::evaluate_in(const Field& ext, std::span<const Elem> point) const {
  if (!field_.is_prime() || ext.characteristic() != field_.characteristic())
    throw InputError("evaluate_in: field is not an extension of the coefficient field");
  if (point.size() != nvars_) throw InputError("evaluation point has wrong length");
  Elem acc = 0;
  for (const auto& [m, c] : terms_) {
    Elem t = c;  // prime-subfield elements share their encoding
    for (std::size_t i = 0; i < nvars_ && t; ++i)
      if (m[i]) t = ext.mul(t, ext.pow(point[i], m[i]));
    acc = ext.add(acc, t);
  }
  return acc;
}

MPoly MPoly::homogeneous_part(unsigned degree) const {
  MPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) == degree) r.terms_.emplace(m, c);
  return r;
}

MPoly MPoly::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw InputError("extended: cannot drop variables");
  MPoly r(field_, nvars);
  for (const auto& [m, c] : terms_) {
    Monomial e = m;
    e.resize(nvars, 0);
    r.terms_.emplace(std::move(e), c);
  }
  return r;
}

std::string format_coefficient(const Field& f, Elem c, bool& negative) {
  negative = false;
  if (f.is_prime()) {
    const unsigned p = f.characteristic();
    if (p > 2 && c > p / 2) {
      negative = true;
      return std::to_string(p - c);
    }
    return std::to_string(c);
  }
  return "(" + f.format(c) + ")";
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (names.size() < nvars_) throw InputError("not enough variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = false;
    const std::string coef = format_coefficient(field_, c, negative);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      factors.push_back(m[i] == 1 ? names[i] : names[i] + "^" + std::to_string(m[i]));
    }
    if (factors.empty()) {
      os << coef;
      continue;
    }
    if (coef != "1") os << coef << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

std::string MPoly::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars_; ++i) names.push_back("x" + std::to_string(i + 1));
  return to_string(names);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial cur(nvars, 0);
  // recursive fill: distribute `rest` among variables i..nvars-1
  auto rec = [&](auto&& self, std::size_t i, unsigned rest) -> void {
    if (i + 1 == nvars) {
      cur[i] = static_cast<std::uint16_t>(rest);
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= rest; ++e) {
      cur[i] = static_cast<std::uint16_t>(e);
      self(self, i + 1, rest - e);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace hexcol
