#include "complex/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "common/errors.hpp"

namespace hexcol {

std::vector<Simplex> faces_of(const Simplex& s, int k) {
  std::vector<Simplex> out;
  const int n = static_cast<int>(s.size());
  if (k < 0 || k + 1 > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(k + 1));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Simplex f;
    f.reserve(pick.size());
    for (int i : pick) f.push_back(s[static_cast<std::size_t>(i)]);
    out.push_back(std::move(f));
    int i = k;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (k + 1) + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Simplex drop_vertex(const Simplex& s, std::size_t m) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != m) f.push_back(s[i]);
  return f;
}

bool is_face_of(const Simplex& face, const Simplex& s) {
  return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

std::string simplex_label(const Simplex& s) {
  const bool compact = std::all_of(s.begin(), s.end(), [](int v) { return v >= 1 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!compact && i) out += '.';
    out += std::to_string(s[i]);
  }
  return out;
}

Triangulation::Triangulation(int num_vertices, std::vector<Simplex> facets) : num_vertices_(num_vertices) {
  if (num_vertices < 1) throw InputError("a complex needs at least one vertex");
  if (facets.empty()) throw InputError("a complex needs at least one facet");
  dim_ = static_cast<int>(facets.front().size()) - 1;
  if (dim_ < 0) throw InputError("empty facet");
  for (auto& f : facets) {
    if (static_cast<int>(f.size()) != dim_ + 1) throw InputError("facets of mixed dimension");
    std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 1 || f[i] > num_vertices)
        throw InputError("vertex " + std::to_string(f[i]) + " out of range 1.." + std::to_string(num_vertices));
      if (i && f[i] == f[i - 1]) throw InputError("repeated vertex " + std::to_string(f[i]) + " in a facet");
    }
  }
  std::sort(facets.begin(), facets.end());
  for (std::size_t i = 1; i < facets.size(); ++i)
    if (facets[i] == facets[i - 1]) throw InputError("duplicate facet " + simplex_label(facets[i]));

  const auto nd = static_cast<std::size_t>(dim_ + 1);
  simplices_.resize(nd);
  index_.resize(nd);
  simplices_[static_cast<std::size_t>(dim_)] = std::move(facets);
  for (int k = dim_ - 1; k >= 0; --k) {
    std::set<Simplex> acc;
    for (const auto& s : simplices_[static_cast<std::size_t>(k + 1)])
      for (std::size_t m = 0; m < s.size(); ++m) acc.insert(drop_vertex(s, m));
    simplices_[static_cast<std::size_t>(k)].assign(acc.begin(), acc.end());
  }
  for (std::size_t k = 0; k < nd; ++k)
    for (std::size_t i = 0; i < simplices_[k].size(); ++i) index_[k].emplace(simplices_[k][i], i);

  cofaces_.resize(nd);
  for (std::size_t k = 0; k + 1 < nd; ++k) {
    cofaces_[k].assign(simplices_[k].size(), {});
    for (std::size_t j = 0; j < simplices_[k + 1].size(); ++j) {
      const auto& s = simplices_[k + 1][j];
      for (std::size_t m = 0; m < s.size(); ++m) cofaces_[k][index_[k].at(drop_vertex(s, m))].push_back(j);
    }
  }
  cofaces_[nd - 1].assign(simplices_[nd - 1].size(), {});
}

Triangulation Triangulation::standard_simplex(int n) {
  if (n < 0) throw InputError("negative simplex dimension");
  Simplex s(static_cast<std::size_t>(n + 1));
  std::iota(s.begin(), s.end(), 1);
  return Triangulation(n + 1, {s});
}

Triangulation Triangulation::simplex_boundary(int n) {
  if (n < 0) throw InputError("negative sphere dimension");
  Simplex s(static_cast<std::size_t>(n + 2));
  std::iota(s.begin(), s.end(), 1);
  std::vector<Simplex> facets;
  for (std::size_t m = 0; m < s.size(); ++m) facets.push_back(drop_vertex(s, m));
  return Triangulation(n + 2, std::move(facets));
}

const std::vector<Simplex>& Triangulation::simplices(int n) const {
  static const std::vector<Simplex> empty;
  if (n < 0 || n > dim_) return empty;
  return simplices_[static_cast<std::size_t>(n)];
}

std::vector<std::size_t> Triangulation::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& s : simplices_) f.push_back(s.size());
  return f;
}

long long Triangulation::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < simplices_.size(); ++k)
    chi += (k % 2 ? -1 : 1) * static_cast<long long>(simplices_[k].size());
  return chi;
}

std::optional<std::size_t> Triangulation::find(const Simplex& s) const {
  if (s.empty() || static_cast<int>(s.size()) > dim_ + 1) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t Triangulation::index_of(const Simplex& s) const {
  auto i = find(s);
  if (!i) throw InputError("simplex " + simplex_label(s) + " is not in the complex");
  return *i;
}

const std::vector<std::vector<std::size_t>>& Triangulation::cofaces(int n) const {
  if (n < 0 || n > dim_) throw InputError("cofaces: dimension out of range");
  return cofaces_[static_cast<std::size_t>(n)];
}

std::vector<std::size_t> Triangulation::star_facets(const Simplex& s) const {
  const auto i = find(s);
  if (!i) throw InputError("simplex " + simplex_label(s) + " is not in the complex");
  // walk up the coface lattice
  std::set<std::size_t> cur{*i};
  for (int k = static_cast<int>(s.size()) - 1; k < dim_; ++k) {
    std::set<std::size_t> next;
    for (auto j : cur)
      for (auto c : cofaces_[static_cast<std::size_t>(k)][j]) next.insert(c);
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Connectivity of a collection of vertex sets through shared vertices.
bool sets_connected(const std::vector<Simplex>& sets) {
  if (sets.empty()) return true;
  std::map<int, std::size_t> first_owner;
  UnionFind uf(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int v : sets[i]) {
      auto [it, inserted] = first_owner.emplace(v, i);
      if (!inserted) uf.unite(i, it->second);
    }
  const std::size_t root = uf.find(0);
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (uf.find(i) != root) return false;
  return true;
}

}  // namespace

std::vector<std::vector<std::size_t>> Triangulation::components() const {
  const auto& fs = facets();
  UnionFind uf(fs.size());
  std::map<int, std::size_t> owner;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (int v : fs[i]) {
      auto [it, inserted] = owner.emplace(v, i);
      if (!inserted) uf.unite(i, it->second);
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < fs.size(); ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

ClosedReport validate_closed(const Triangulation& t) {
  ClosedReport r;
  const int d = t.dim();
  if (d >= 1) {
    const auto& ridges = t.simplices(d - 1);
    const auto& cof = t.cofaces(d - 1);
    for (std::size_t i = 0; i < ridges.size(); ++i)
      if (cof[i].size() != 2) {
        r.passed = false;
        r.failures.push_back("ridge " + simplex_label(ridges[i]) + " lies in " + std::to_string(cof[i].size()) +
                             " facets");
      }
  }
  for (int k = 0; k + 2 <= d; ++k) {
    for (const auto& s : t.simplices(k)) {
      std::vector<Simplex> lk;
      for (auto fi : t.star_facets(s)) {
        Simplex rest;
        std::set_difference(t.facets()[fi].begin(), t.facets()[fi].end(), s.begin(), s.end(),
                            std::back_inserter(rest));
        lk.push_back(std::move(rest));
      }
      if (!sets_connected(lk)) {
        r.passed = false;
        r.failures.push_back("link of " + simplex_label(s) + " is disconnected");
      }
    }
  }
  return r;
}

LinkComplex link(const Triangulation& t, const Simplex& b) {
  Simplex sb = b;
  std::sort(sb.begin(), sb.end());
  if (!t.contains(sb)) throw InputError("simplex " + simplex_label(sb) + " is not in the complex");
  if (static_cast<int>(sb.size()) == t.dim() + 1) throw InputError("the link of a facet is empty");
  std::vector<Simplex> rest;
  std::set<int> used;
  for (auto fi : t.star_facets(sb)) {
    Simplex r;
    std::set_difference(t.facets()[fi].begin(), t.facets()[fi].end(), sb.begin(), sb.end(), std::back_inserter(r));
    used.insert(r.begin(), r.end());
    rest.push_back(std::move(r));
  }
  std::vector<int> labels(used.begin(), used.end());
  std::map<int, int> renum;
  for (std::size_t i = 0; i < labels.size(); ++i) renum[labels[i]] = static_cast<int>(i + 1);
  for (auto& r : rest)
    for (auto& v : r) v = renum[v];
  return LinkComplex{Triangulation(static_cast<int>(labels.size()), std::move(rest)), std::move(labels)};
}

Triangulation staircase_product(const Triangulation& a, const Triangulation& b) {
  const int da = a.dim(), db = b.dim();
  if (da + db > 12) throw InputError("product dimension too large");
  const int nb = b.num_vertices();
  const long long nv = static_cast<long long>(a.num_vertices()) * nb;
  if (nv > 1000000) throw InputError("product has too many vertices");
  // lattice paths: sequences of da steps in the first factor and db in the second
  std::vector<std::vector<bool>> paths;
  std::vector<bool> steps(static_cast<std::size_t>(da + db), false);
  std::fill(steps.begin() + db, steps.end(), true);  // true = step in the first factor
  do paths.push_back(steps);
  while (std::next_permutation(steps.begin(), steps.end()));

  std::vector<Simplex> facets;
  facets.reserve(a.facets().size() * b.facets().size() * paths.size());
  for (const auto& s : a.facets())
    for (const auto& t : b.facets())
      for (const auto& path : paths) {
        std::size_t i = 0, j = 0;
        Simplex f;
        f.reserve(static_cast<std::size_t>(da + db + 1));
        f.push_back((s[i] - 1) * nb + t[j]);
        for (bool first : path) {
          if (first)
            ++i;
          else
            ++j;
          f.push_back((s[i] - 1) * nb + t[j]);
        }
        facets.push_back(std::move(f));
      }
  return Triangulation(static_cast<int>(nv), std::move(facets));
}

Triangulation compactify(const Triangulation& t) {
  std::set<int> used;
  for (const auto& f : t.facets()) used.insert(f.begin(), f.end());
  std::map<int, int> renum;
  int next = 1;
  for (int v : used) renum[v] = next++;
  std::vector<Simplex> facets = t.facets();
  for (auto& f : facets)
    for (auto& v : f) v = renum[v];
  return Triangulation(next - 1, std::move(facets));
}

}  // namespace hexcol
