#include "invariants/invariants.hpp"

#include <array>

#include "common/errors.hpp"

namespace hexcol {

namespace {

// For each canonical coordinate of Delta^n: the vertex positions (0-based) of
// its tetrahedron and whether it is the y coordinate.
struct FreeSlot {
  std::array<int, 4> positions;
  bool y;
};

std::vector<FreeSlot> free_slots(const StandardColorings& sc) {
  std::vector<FreeSlot> out;
  for (auto a : sc.free_variables()) {
    const Simplex& t = sc.simplex().simplices(3)[a / 2];
    FreeSlot s{{t[0] - 1, t[1] - 1, t[2] - 1, t[3] - 1}, a % 2 == 1};
    out.push_back(s);
  }
  return out;
}

std::size_t coloring_index(const Triangulation& k, const Simplex& sigma, const FreeSlot& slot) {
  const Simplex t{sigma[slot.positions[0]], sigma[slot.positions[1]], sigma[slot.positions[2]],
                  sigma[slot.positions[3]]};
  return 2 * k.index_of(t) + (slot.y ? 1 : 0);
}

void check_level(const Triangulation& k, const HexCochain& c) {
  if (c.level() > k.dim())
    throw InputError("a level-" + std::to_string(c.level()) + " cochain needs " + std::to_string(c.level()) +
                     "-simplices, the complex has dimension " + std::to_string(k.dim()));
}

}  // namespace

Vector chain_map(const Triangulation& k, const HexCochain& c, const Vector& coloring, const Vector* second) {
  check_level(k, c);
  const Field& f = c.field();
  if (c.bilinear() && !second) throw InputError("bilinear cochain needs two colorings");
  if (!is_permitted(k, f, coloring) || (second && !is_permitted(k, f, *second)))
    throw DomainError("coloring is not permitted");
  const auto& sc = StandardColorings::get(c.level(), f);
  const auto slots = free_slots(sc);
  Vector out;
  out.reserve(k.count(c.level()));
  std::vector<Elem> point;
  for (const auto& sigma : k.simplices(c.level())) {
    point.clear();
    for (const auto& s : slots) point.push_back(coloring[coloring_index(k, sigma, s)]);
    if (c.bilinear())
      for (const auto& s : slots) point.push_back((*second)[coloring_index(k, sigma, s)]);
    out.push_back(c.poly().evaluate(point));
  }
  return out;
}

std::vector<MPoly> chain_map(const Triangulation& k, const HexCochain& c, const GenericColoring& g) {
  check_level(k, c);
  const Field& f = c.field();
  const auto& sc = StandardColorings::get(c.level(), f);
  const auto slots = free_slots(sc);
  const std::size_t d = g.d();
  for (const auto& v : g.lifts)
    if (!is_permitted(k, f, v)) throw DomainError("generic coloring has a lift that is not permitted");
  const std::size_t nfree = slots.size();
  const std::size_t rows = c.bilinear() ? 2 * nfree : nfree;
  const std::size_t cols = c.bilinear() ? 2 * d : d;
  std::vector<MPoly> out;
  out.reserve(k.count(c.level()));
  for (const auto& sigma : k.simplices(c.level())) {
    Matrix l(f, rows, cols);
    for (std::size_t j = 0; j < nfree; ++j) {
      const std::size_t idx = coloring_index(k, sigma, slots[j]);
      for (std::size_t i = 0; i < d; ++i) {
        const Elem v = g.lifts[i][idx];
        if (!v) continue;
        l.set(j, i, v);
        if (c.bilinear()) l.set(nfree + j, d + i, v);
      }
    }
    out.push_back(d == 0 ? MPoly::constant(f, cols, c.poly().evaluate(Vector(c.poly().nvars(), 0)))
                         : c.poly().substitute_linear(l));
  }
  return out;
}

std::vector<std::string> invariant_variable_names(std::size_t d, bool bilinear) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d; ++i) names.push_back("X" + std::to_string(i));
  if (bilinear)
    for (std::size_t i = 1; i <= d; ++i) names.push_back("X'" + std::to_string(i));
  return names;
}

std::string InvariantPolynomial::to_string() const {
  return poly.to_string(invariant_variable_names(d(), bilinear));
}

std::string invariant_name(const std::string& cocycle_name) {
  if (cocycle_name == "c3_bilinear") return "p3";
  if (cocycle_name == "c4_bilinear") return "p4";
  if (cocycle_name == "c4_cubic_1") return "q";
  if (cocycle_name == "c4_cubic_2") return "r";
  return cocycle_name;
}

std::vector<InvariantPolynomial> gcol_with_lifts(const Triangulation& k, const HexCochain& c,
                                                 const GenericColoring& g, const std::string& name) {
  if (c.level() != 3 && c.level() != 4) throw InputError("g_col is defined for hexagon 3- and 4-cocycles");
  if (!is_cocycle(c)) throw DomainError("cochain is not a hexagon cocycle");
  const Field& f = c.field();
  const std::size_t nvars = c.bilinear() ? 2 * g.d() : g.d();
  const auto values = chain_map(k, c, g);
  const std::string base = name.empty() ? (c.level() == 3 ? "p3" : "p4") : name;
  auto pair = [&](const Vector& cycle) {
    MPoly acc(f, nvars);
    for (std::size_t s = 0; s < cycle.size(); ++s)
      if (cycle[s]) acc += values[s].scaled(cycle[s]);
    return acc;
  };
  std::vector<InvariantPolynomial> out;
  if (c.level() == 3) {
    const auto basis = homology_basis(k, 3, f);
    for (std::size_t i = 0; i < basis.dim(); ++i)
      out.push_back({base + "_" + std::to_string(i + 1), 3, i, c.bilinear(), pair(basis.cycles[i])});
  } else {
    const auto cycles = fundamental_cycles(k, f);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const std::string nm = cycles.size() == 1 ? base : base + "_c" + std::to_string(i + 1);
      out.push_back({nm, 4, i, c.bilinear(), pair(cycles[i])});
    }
  }
  return out;
}

std::vector<InvariantPolynomial> gcol(const Triangulation& k, const HexCochain& c, const std::string& name) {
  return gcol_with_lifts(k, c, GenericColoring{coloring_homology(k, c.field()).lifts()}, name);
}

std::uint64_t ValueDistribution::total() const {
  std::uint64_t s = 0;
  for (const auto& [v, n] : counts) s += n;
  return s;
}

ValueDistribution value_distribution(const MPoly& p, const Field& ext, std::uint64_t cap) {
  const Field& base = p.field();
  if (base != ext && !(base.is_prime() && base.characteristic() == ext.characteristic()))
    throw InputError("cannot evaluate a polynomial over " + base.name() + " in " + ext.name());
  const std::size_t n = p.nvars();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (points > cap / ext.order()) {
      points = cap + 1;
      break;
    }
    points *= ext.order();
  }
  if (points > cap)
    throw ResourceError("value distribution over " + ext.name() + " in " + std::to_string(n) +
                        " variables exceeds the enumeration cap of " + std::to_string(cap) + " points");
  // prime-field coefficients are the integers 0..p-1 in every extension
  struct Term {
    Elem c;
    std::vector<std::pair<std::size_t, unsigned>> factors;
  };
  std::vector<Term> terms;
  unsigned max_exp = 1;
  for (const auto& [m, c] : p.terms()) {
    Term t{c, {}};
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) {
        t.factors.emplace_back(i, m[i]);
        max_exp = std::max<unsigned>(max_exp, m[i]);
      }
    terms.push_back(std::move(t));
  }
  ValueDistribution out{ext, {}};
  std::vector<Elem> x(n, 0);
  std::vector<std::vector<Elem>> powers(n, std::vector<Elem>(max_exp + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    powers[i][0] = 1;
  }
  for (std::uint64_t count = 0; count < points; ++count) {
    Elem acc = 0;
    for (const auto& t : terms) {
      Elem v = t.c;
      for (const auto& [i, e] : t.factors) v = ext.mul(v, powers[i][e]);
      acc = ext.add(acc, v);
    }
    ++out.counts[acc];
    // odometer step, refreshing power tables of the digits that changed
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = x[i] + 1 == ext.order() ? 0 : x[i] + 1;
      for (unsigned e = 1; e <= max_exp; ++e) powers[i][e] = ext.mul(powers[i][e - 1], x[i]);
      if (x[i] != 0) break;
    }
  }
  return out;
}

Matrix bilinear_matrix(const MPoly& p) {
  if (p.nvars() % 2 != 0) throw InputError("bilinear polynomial needs an even number of variables");
  const std::size_t d = p.nvars() / 2;
  Matrix b(p.field(), d, d);
  for (const auto& [m, c] : p.terms()) {
    std::size_t i = d, j = d, first = 0, second = 0;
    for (std::size_t v = 0; v < 2 * d; ++v) {
      if (!m[v]) continue;
      if (v < d) {
        first += m[v];
        i = v;
      } else {
        second += m[v];
        j = v - d;
      }
    }
    if (first != 1 || second != 1) throw InputError("polynomial is not of bidegree (1,1)");
    b.set(i, j, c);
  }
  return b;
}

std::size_t bilinear_rank(const MPoly& p) { return rank(bilinear_matrix(p)); }

EqualityReport equality_report(const Triangulation& k, const Field& f) {
  if (f.characteristic() != 2) throw DomainError("the cubic cocycles need characteristic 2");
  const GenericColoring g{coloring_homology(k, f).lifts()};
  EqualityReport rep;
  rep.q = gcol_with_lifts(k, builtin_cocycle("c4_cubic_1", f), g, "q");
  rep.r = gcol_with_lifts(k, builtin_cocycle("c4_cubic_2", f), g, "r");
  rep.equal = rep.q.size() == rep.r.size();
  for (std::size_t i = 0; rep.equal && i < rep.q.size(); ++i) rep.equal = rep.q[i].poly == rep.r[i].poly;
  return rep;
}

}  // namespace hexcol
