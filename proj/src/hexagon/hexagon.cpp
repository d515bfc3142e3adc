#include "hexagon/hexagon.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "coloring/coloring.hpp"
#include "common/errors.hpp"

namespace hexcol {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::mutex& face_mutex() {
  static std::mutex m;
  return m;
}

Matrix block_diagonal(const Matrix& a) {
  Matrix out(a.field(), 2 * a.rows(), 2 * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem v = a.at(i, j);
      if (v == 0) continue;
      out.set(i, j, v);
      out.set(a.rows() + i, a.cols() + j, v);
    }
  return out;
}

bool is_bihomogeneous_11(const MPoly& p, std::size_t half) {
  for (const auto& [m, c] : p.terms()) {
    unsigned first = 0, second = 0;
    for (std::size_t i = 0; i < m.size(); ++i) (i < half ? first : second) += m[i];
    if (first != 1 || second != 1) return false;
  }
  return true;
}

}  // namespace

const StandardColorings& StandardColorings::get(int n, const Field& f) {
  if (n < 3) throw InputError("hexagon cochains start at level 3");
  if (n > 8) throw ResourceError("hexagon level " + std::to_string(n) + " is above the supported maximum of 8");
  static std::map<std::pair<int, std::string>, std::unique_ptr<StandardColorings>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& slot = cache[{n, f.spec()}];
  if (!slot) slot.reset(new StandardColorings(n, f));
  return *slot;
}

StandardColorings::StandardColorings(int n, const Field& f)
    : level_(n),
      simplex_(Triangulation::standard_simplex(n)),
      space_(f, 2 * simplex_.count(3)),
      param_(f, 0, 0) {
  const Matrix constraints = functional_matrix(simplex_, f);
  space_ = Subspace::kernel(constraints);
  const auto e = row_reduce(constraints);
  std::vector<bool> is_pivot(ambient_dim(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < ambient_dim(); ++c)
    if (!is_pivot[c]) free_.push_back(c);
  param_ = Matrix(f, ambient_dim(), free_.size());
  for (std::size_t j = 0; j < free_.size(); ++j) {
    param_.set(free_[j], j, 1);
    for (std::size_t r = 0; r < e.rank(); ++r) param_.set(e.pivots[r], j, f.neg(e.basis.at(r, free_[j])));
  }
  faces_.resize(n + 3);
}

const Matrix& StandardColorings::face_map(int k) const {
  if (k < 1 || k > level_ + 2) throw InputError("face index out of range");
  const StandardColorings& next = get(level_ + 1, field());
  std::lock_guard<std::mutex> lock(face_mutex());
  auto& slot = faces_[k];
  if (!slot) {
    Matrix l(field(), dim(), next.dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      const std::size_t a = free_[j];
      Simplex image = simplex_.simplices(3)[a / 2];
      for (int& v : image)
        if (v >= k) ++v;
      const std::size_t target = next.ambient_index(a % 2 == 1, image);
      for (std::size_t c = 0; c < next.dim(); ++c) l.set(j, c, next.param_.at(target, c));
    }
    slot = std::move(l);
  }
  return *slot;
}

std::size_t StandardColorings::ambient_index(bool y, const Simplex& tetra) const {
  auto idx = simplex_.find(tetra);
  if (!idx || tetra.size() != 4)
    throw InputError("tetrahedron " + simplex_label(tetra) + " is not in the standard " + std::to_string(level_) +
                     "-simplex");
  return 2 * *idx + (y ? 1 : 0);
}

std::string StandardColorings::ambient_name(std::size_t index, bool primed) const {
  std::string s = index % 2 == 1 ? "y" : "x";
  if (primed) s += "'";
  return s + "[" + simplex_label(simplex_.simplices(3)[index / 2]) + "]";
}

std::vector<std::string> StandardColorings::canonical_names(bool bilinear) const {
  std::vector<std::string> names;
  for (auto a : free_) names.push_back(ambient_name(a));
  if (bilinear)
    for (auto a : free_) names.push_back(ambient_name(a, true));
  return names;
}

std::string to_string(CochainKind kind) { return kind == CochainKind::bilinear ? "bilinear" : "polynomial"; }

CochainKind parse_kind(const std::string& s) {
  if (s == "polynomial") return CochainKind::polynomial;
  if (s == "bilinear") return CochainKind::bilinear;
  throw InputError("unknown cochain kind '" + s + "' (expected polynomial or bilinear)");
}

HexCochain::HexCochain(int level, CochainKind kind, MPoly canonical)
    : level_(level), kind_(kind), poly_(std::move(canonical)) {
  const auto& sc = StandardColorings::get(level, poly_.field());
  const std::size_t want = kind == CochainKind::bilinear ? 2 * sc.dim() : sc.dim();
  if (poly_.nvars() != want) throw InputError("cochain has the wrong number of canonical variables");
  if (kind == CochainKind::bilinear && !is_bihomogeneous_11(poly_, sc.dim()))
    throw InputError("bilinear cochain must have bidegree (1,1)");
}

HexCochain HexCochain::zero(int level, CochainKind kind, const Field& f) {
  const auto& sc = StandardColorings::get(level, f);
  return HexCochain(level, kind, MPoly(f, kind == CochainKind::bilinear ? 2 * sc.dim() : sc.dim()));
}

HexCochain HexCochain::constant(int level, const Field& f, Elem c) {
  const auto& sc = StandardColorings::get(level, f);
  return HexCochain(level, CochainKind::polynomial, MPoly::constant(f, sc.dim(), c));
}

HexCochain HexCochain::operator+(const HexCochain& o) const {
  if (level_ != o.level_ || kind_ != o.kind_) throw InputError("cochains of different level or kind");
  return HexCochain(level_, kind_, poly_ + o.poly_);
}

HexCochain HexCochain::operator-(const HexCochain& o) const {
  if (level_ != o.level_ || kind_ != o.kind_) throw InputError("cochains of different level or kind");
  return HexCochain(level_, kind_, poly_ - o.poly_);
}

HexCochain HexCochain::scaled(Elem c) const { return HexCochain(level_, kind_, poly_.scaled(c)); }

std::string HexCochain::to_string() const {
  return poly_.to_string(StandardColorings::get(level_, field()).canonical_names(bilinear()));
}

HexCochain ambient_to_canonical(int level, CochainKind kind, const MPoly& ambient) {
  const auto& sc = StandardColorings::get(level, ambient.field());
  const bool bi = kind == CochainKind::bilinear;
  const std::size_t want = bi ? 2 * sc.ambient_dim() : sc.ambient_dim();
  if (ambient.nvars() != want)
    throw InputError("ambient polynomial uses " + std::to_string(ambient.nvars()) + " variables, expected " +
                     std::to_string(want));
  if (bi && !is_bihomogeneous_11(ambient, sc.ambient_dim()))
    throw InputError("bilinear cochain must have bidegree (1,1) in unprimed and primed variables");
  const Matrix l = bi ? block_diagonal(sc.parametrization()) : sc.parametrization();
  return HexCochain(level, kind, ambient.substitute_linear(l));
}

HexCochain coboundary(const HexCochain& c) {
  const int n = c.level();
  const Field& f = c.field();
  const auto& sc = StandardColorings::get(n, f);
  HexCochain out = HexCochain::zero(n + 1, c.kind(), f);
  MPoly sum = out.poly();
  for (int k = 1; k <= n + 2; ++k) {
    const Matrix& face = sc.face_map(k);
    const MPoly pulled = c.poly().substitute_linear(c.bilinear() ? block_diagonal(face) : face);
    if (k % 2 == 1)
      sum += pulled;
    else
      sum -= pulled;
  }
  return HexCochain(n + 1, c.kind(), std::move(sum));
}

bool is_cocycle(const HexCochain& c) { return coboundary(c).is_zero(); }

Elem evaluate(const HexCochain& c, const Vector& coloring, const Vector* second) {
  const auto& sc = StandardColorings::get(c.level(), c.field());
  if (c.bilinear() && !second) throw InputError("bilinear cochain needs two colorings");
  Vector point;
  for (const Vector* v : {&coloring, second}) {
    if (!v) continue;
    if (v->size() != sc.ambient_dim() || !sc.space().contains(*v)) throw DomainError("coloring is not permitted");
    for (auto a : sc.free_variables()) point.push_back((*v)[a]);
    if (!c.bilinear()) break;
  }
  return c.poly().evaluate(point);
}

std::vector<std::string> builtin_cocycle_names() { return {"c3_bilinear", "c4_bilinear", "c4_cubic_1", "c4_cubic_2"}; }

HexCochain builtin_cocycle(const std::string& name, const Field& f) {
  auto checked = [&](HexCochain c) {
    if (!is_cocycle(c)) throw std::logic_error("builtin " + name + " is not a cocycle over " + f.name());
    return c;
  };
  if (name == "c3_bilinear") {
    const auto& sc = StandardColorings::get(3, f);
    const std::size_t a = sc.ambient_dim();
    auto v = [&](std::size_t i) { return MPoly::variable(f, 2 * a, i); };
    const MPoly x = v(0), y = v(1), xp = v(a), yp = v(a + 1);
    return checked(ambient_to_canonical(3, CochainKind::bilinear, -(x * yp) - y * xp));
  }
  const auto& sc = StandardColorings::get(4, f);
  const std::size_t a = sc.ambient_dim();
  if (name == "c4_bilinear") {
    const MPoly y2345 = MPoly::variable(f, 2 * a, sc.ambient_index(true, {2, 3, 4, 5}));
    const MPoly yp1234 = MPoly::variable(f, 2 * a, a + sc.ambient_index(true, {1, 2, 3, 4}));
    return checked(ambient_to_canonical(4, CochainKind::bilinear, y2345 * yp1234));
  }
  if (name == "c4_cubic_1" || name == "c4_cubic_2") {
    if (f.characteristic() != 2) throw DomainError(name + " is defined in characteristic 2 only");
    auto var = [&](bool y, const Simplex& t) { return MPoly::variable(f, a, sc.ambient_index(y, t)); };
    if (name == "c4_cubic_1") {
      const MPoly y1234 = var(true, {1, 2, 3, 4});
      return checked(ambient_to_canonical(4, CochainKind::polynomial, var(true, {2, 3, 4, 5}) * y1234 * y1234));
    }
    auto sum = [&](const Simplex& t) { return var(false, t) + var(true, t); };
    const MPoly A = sum({2, 3, 4, 5}), B = sum({1, 3, 4, 5}), C = sum({1, 2, 4, 5}), D = sum({1, 2, 3, 5}),
                E = sum({1, 2, 3, 4});
    const MPoly p = B * D * E + B * C * E + A * C * E + A * C * D + A * B * D;
    return checked(ambient_to_canonical(4, CochainKind::polynomial, p));
  }
  throw InputError("unknown builtin cocycle '" + name + "'");
}

HexCochain from_tilde_basis(int level, CochainKind kind, const MPoly& ambient_tilde) {
  const Field& f = ambient_tilde.field();
  const auto& sc = StandardColorings::get(level, f);
  const std::size_t a = sc.ambient_dim();
  Matrix s(f, a, a);
  for (std::size_t t = 0; t < a / 2; ++t) {
    s.set(2 * t, 2 * t, f.neg(1));  // x~ = -x + y
    s.set(2 * t, 2 * t + 1, 1);
    s.set(2 * t + 1, 2 * t, 1);  // y~ = x
  }
  const Matrix l = kind == CochainKind::bilinear ? block_diagonal(s) : s;
  if (ambient_tilde.nvars() != l.rows()) throw InputError("ambient polynomial has the wrong number of variables");
  return ambient_to_canonical(level, kind, ambient_tilde.substitute_linear(l));
}

namespace {

struct Factor {
  bool y = false;
  bool primed = false;
  Simplex tetra;
  unsigned exponent = 1;
};

struct Term {
  long long coefficient = 1;
  std::vector<Factor> factors;
};

class LiteralParser {
 public:
  explicit LiteralParser(const std::string& s) : s_(s) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    if (at_end()) throw error("empty cochain literal");
    bool first = true;
    while (!at_end()) {
      long long sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      Term t = term();
      t.coefficient *= sign;
      terms.push_back(std::move(t));
      first = false;
      skip();
    }
    return terms;
  }

 private:
  Term term() {
    Term t;
    for (;;) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coefficient *= number();
      } else if (peek() == 'x' || peek() == 'y') {
        t.factors.push_back(factor());
      } else {
        throw error("expected a coefficient or a variable");
      }
      skip();
      if (peek() != '*') break;
      get();
    }
    return t;
  }

  Factor factor() {
    Factor f;
    f.y = get() == 'y';
    if (peek() == '\'') {
      get();
      f.primed = true;
    }
    if (peek() == '[') {
      get();
      std::string label;
      while (!at_end() && peek() != ']') label += get();
      if (at_end()) throw error("missing ']'");
      get();
      f.tetra = parse_label(label);
    } else {
      f.tetra = {1, 2, 3, 4};
    }
    skip();
    if (peek() == '^') {
      get();
      skip();
      const long long e = number();
      if (e < 1 || e > 64) throw error("exponent out of range");
      f.exponent = static_cast<unsigned>(e);
    }
    return f;
  }

  Simplex parse_label(const std::string& label) {
    Simplex s;
    if (label.find('.') != std::string::npos) {
      std::size_t start = 0;
      while (start <= label.size()) {
        const auto dot = label.find('.', start);
        const std::string part = label.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
          throw error("bad tetrahedron label '" + label + "'");
        s.push_back(std::stoi(part));
        if (dot == std::string::npos) break;
        start = dot + 1;
      }
    } else {
      for (char c : label) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw error("bad tetrahedron label '" + label + "'");
        s.push_back(c - '0');
      }
    }
    if (s.size() != 4) throw error("tetrahedron label '" + label + "' needs four vertices");
    for (std::size_t i = 0; i < 4; ++i)
      if (s[i] < 1 || (i > 0 && s[i] <= s[i - 1]))
        throw error("tetrahedron label '" + label + "' must be increasing and positive");
    return s;
  }

  long long number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw error("expected a number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > (1ll << 40)) throw error("number too large");
    }
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  InputError error(const std::string& what) const {
    return InputError(what + " at position " + std::to_string(pos_ + 1) + " of cochain literal");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

HexCochain parse_cochain(const std::string& text, const Field& f, std::optional<int> level,
                         std::optional<CochainKind> kind) {
  const auto terms = LiteralParser(text).parse();
  int max_label = 4;
  bool any_primed = false;
  for (const auto& t : terms)
    for (const auto& fa : t.factors) {
      max_label = std::max(max_label, fa.tetra.back());
      any_primed = any_primed || fa.primed;
    }
  const int n = level.value_or(std::max(3, max_label - 1));
  if (max_label > n + 1)
    throw InputError("cochain literal mentions vertex " + std::to_string(max_label) + ", beyond level " +
                     std::to_string(n));
  const CochainKind k = kind.value_or(any_primed ? CochainKind::bilinear : CochainKind::polynomial);
  if (k == CochainKind::polynomial && any_primed)
    throw InputError("primed variables need the bilinear kind");
  const auto& sc = StandardColorings::get(n, f);
  const std::size_t a = sc.ambient_dim();
  const std::size_t nv = k == CochainKind::bilinear ? 2 * a : a;
  MPoly p(f, nv);
  for (const auto& t : terms) {
    Monomial m(nv, 0);
    for (const auto& fa : t.factors) m[sc.ambient_index(fa.y, fa.tetra) + (fa.primed ? a : 0)] += fa.exponent;
    p.add_term(m, f.from_int(t.coefficient));
  }
  return ambient_to_canonical(n, k, p);
}

}  // namespace hexcol
