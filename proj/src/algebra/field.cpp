#include "algebra/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "common/errors.hpp"

namespace hexcol {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<unsigned>;  // coefficients low-to-high over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + (p - (lead * b[i]) % p)) % p;
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t m = n;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(m % p);
        m /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically least monic irreducible, comparing coefficients from the
// highest degree down. Enumerating n with c_{k-1} as the most significant
// base-p digit visits candidates in exactly that order.
Poly least_irreducible(unsigned p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly f(k + 1, 0);
    f[k] = 1;
    std::uint64_t m = n;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<unsigned>(m % p);
      m /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Poly decode(std::uint32_t a, unsigned p, unsigned k) {
  Poly c(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, unsigned p) {
  std::uint32_t a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
  return a;
}

std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, unsigned p, const Poly& mod) {
  const unsigned k = static_cast<unsigned>(mod.size() - 1);
  if (p == 2) {
    std::uint64_t r = 0;
    std::uint64_t x = a;
    for (unsigned i = 0; i < k; ++i)
      if ((b >> i) & 1u) r ^= x << i;
    std::uint64_t m = 0;
    for (unsigned i = 0; i <= k; ++i) m |= std::uint64_t{mod[i]} << i;
    for (int i = 2 * static_cast<int>(k); i >= static_cast<int>(k); --i)
      if ((r >> i) & 1u) r ^= m << (i - static_cast<int>(k));
    return static_cast<std::uint32_t>(r);
  }
  const Poly pa = decode(a, p, k), pb = decode(b, p, k);
  Poly r(2 * k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) r[i + j] = (r[i + j] + pa[i] * pb[j]) % p;
  r = poly_mod(r, mod, p);
  r.resize(k, 0);
  return encode(r, p);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

Field Field::make(unsigned p, unsigned k) {
  if (!hexcol::is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InputError("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InputError("field order " + std::to_string(p) + "^" + std::to_string(k) + " exceeds the supported maximum");
  }

  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Data>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find({p, k}); it != cache.end()) return Field(it->second);

  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = k;
  d->q = static_cast<std::uint32_t>(q);
  if (k == 1) {
    d->modulus = {0, 1};
  } else {
    d->modulus = least_irreducible(p, k);
    const auto factors = prime_factors(q - 1);
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
      std::uint32_t r = 1;
      while (e) {
        if (e & 1) r = slow_mul(r, a, p, d->modulus);
        a = slow_mul(a, a, p, d->modulus);
        e >>= 1;
      }
      return r;
    };
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q; ++cand) {
      bool primitive = true;
      for (auto f : factors)
        if (slow_pow(cand, (q - 1) / f) == 1) {
          primitive = false;
          break;
        }
      if (primitive) {
        g = cand;
        break;
      }
    }
    d->generator = g;
    d->exp.resize(q - 1);
    d->log.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      d->exp[i] = x;
      d->log[x] = i;
      x = slow_mul(x, g, p, d->modulus);
    }
  }
  if (k == 1) {
    // smallest primitive root, for reporting only
    const auto factors = prime_factors(p - 1);
    for (unsigned cand = 1; cand < p; ++cand) {
      bool primitive = true;
      for (auto f : factors) {
        std::uint64_t r = 1, base = cand, e = (p - 1) / f;
        while (e) {
          if (e & 1) r = r * base % p;
          base = base * base % p;
          e >>= 1;
        }
        if (r == 1 && p > 2) primitive = false;
      }
      if (primitive) {
        d->generator = cand;
        break;
      }
    }
  }
  cache[{p, k}] = d;
  return Field(d);
}

Field Field::parse(const std::string& spec) {
  unsigned p = 0, k = 1;
  const auto caret = spec.find('^');
  try {
    std::size_t used = 0;
    const std::string ps = spec.substr(0, caret);
    const unsigned long pv = std::stoul(ps, &used);
    if (used != ps.size()) throw InputError("");
    p = static_cast<unsigned>(pv);
    if (caret != std::string::npos) {
      const std::string ks = spec.substr(caret + 1);
      const unsigned long kv = std::stoul(ks, &used);
      if (used != ks.size()) throw InputError("");
      k = static_cast<unsigned>(kv);
    }
  } catch (const std::exception&) {
    throw InputError("malformed field spec '" + spec + "' (expected p or p^k)");
  }
  return make(p, k);
}

std::string Field::spec() const {
  return d_->k == 1 ? std::to_string(d_->p) : std::to_string(d_->p) + "^" + std::to_string(d_->k);
}

std::string Field::name() const { return "F_" + std::to_string(d_->q); }

Elem Field::add_digits(Elem a, Elem b) const {
  const unsigned p = d_->p;
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < d_->k; ++i) {
    r += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

Elem Field::neg_digits(Elem a) const {
  const unsigned p = d_->p;
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < d_->k; ++i) {
    r += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero in " + name());
  if (d_->k == 1) return pow(a, d_->p - 2);
  const std::uint32_t l = d_->log[a];
  return d_->exp[l == 0 ? 0 : d_->q - 1 - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::from_int(long long v) const {
  const long long p = d_->p;
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<unsigned> Field::coefficients(Elem a) const { return decode(a, d_->p, d_->k); }

Elem Field::from_coefficients(const std::vector<unsigned>& c) const {
  if (c.size() > d_->k) throw InputError("too many coefficients for " + name());
  Poly pc(c.begin(), c.end());
  for (auto& x : pc) x %= d_->p;
  return encode(pc, d_->p);
}

std::string Field::format(Elem a) const {
  if (d_->k == 1) return std::to_string(a);
  // a_0 + a_1 g + ... written with the adjoined root "w"
  const auto c = coefficients(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << "*";
      os << "w";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace hexcol
