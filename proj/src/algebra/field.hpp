#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hexcol {

// A field element. For F_{p^k} the value is the coefficient vector
// (c_0, ..., c_{k-1}) of the residue class mod the field's modulus, packed as
// the base-p integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Prime-subfield
// elements are therefore the integers 0..p-1.
using Elem = std::uint32_t;

// Finite field F_{p^k} with a deterministic modulus: the monic irreducible of
// degree k whose coefficient list (highest degree first) is lexicographically
// least. Copies share the arithmetic tables.
class Field {
 public:
  // Largest supported field order.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

  static Field make(unsigned p, unsigned k = 1);
  // Parses "p" or "p^k".
  static Field parse(const std::string& spec);

  unsigned characteristic() const { return d_->p; }
  unsigned degree() const { return d_->k; }
  std::uint32_t order() const { return d_->q; }
  bool is_prime() const { return d_->k == 1; }
  bool is_binary() const { return d_->p == 2 && d_->k == 1; }

  // Monic modulus, coefficients low-to-high, length k+1.
  const std::vector<unsigned>& modulus() const { return d_->modulus; }

  std::string spec() const;         // "2", "2^3"
  std::string name() const;         // "F_2", "F_8"

  Elem add(Elem a, Elem b) const {
    if (d_->p == 2) return a ^ b;
    if (d_->k == 1) {
      const Elem s = a + b;
      return s >= d_->p ? s - d_->p : s;
    }
    return add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (d_->p == 2 || a == 0) return a;
    if (d_->k == 1) return d_->p - a;
    return neg_digits(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (d_->k == 1) return static_cast<Elem>((std::uint64_t{a} * b) % d_->p);
    std::uint32_t e = d_->log[a] + d_->log[b];
    if (e >= d_->q - 1) e -= d_->q - 1;
    return d_->exp[e];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  Elem from_int(long long v) const;  // image of an integer in the prime subfield
  Elem one() const { return 1; }
  Elem zero() const { return 0; }

  // Multiplicative generator used for the log tables.
  Elem generator() const { return d_->generator; }

  std::vector<unsigned> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<unsigned>& c) const;
  std::string format(Elem a) const;

  bool operator==(const Field& o) const {
    return d_ == o.d_ || (d_->p == o.d_->p && d_->k == o.d_->k);
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  struct Data {
    unsigned p = 2;
    unsigned k = 1;
    std::uint32_t q = 2;
    std::vector<unsigned> modulus;
    std::vector<std::uint32_t> exp;  // length q-1 (extension fields only)
    std::vector<std::uint32_t> log;  // length q
    Elem generator = 1;
  };

  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  Elem add_digits(Elem a, Elem b) const;
  Elem neg_digits(Elem a) const;

  std::shared_ptr<const Data> d_;
};

bool is_prime(unsigned n);

}  // namespace hexcol
