#include "pachner/pachner.hpp"

#include <algorithm>
#include <set>

#include "coloring/coloring.hpp"
#include "common/errors.hpp"

namespace hexcol {

namespace {

const Simplex kDelta5{1, 2, 3, 4, 5, 6};

Simplex without(const Simplex& w, int v) {
  Simplex out;
  for (int x : w)
    if (x != v) out.push_back(x);
  return out;
}

// Tetrahedra lying in exactly one pentachoron of the list.
std::vector<Simplex> boundary_tetrahedra(const std::vector<Simplex>& pentachora) {
  std::map<Simplex, int> seen;
  for (const auto& p : pentachora)
    for (const auto& t : faces_of(p, 3)) ++seen[t];
  std::vector<Simplex> out;
  for (const auto& [t, n] : seen)
    if (n == 1) out.push_back(t);
  return out;
}

std::vector<std::size_t> boundary_columns(const Triangulation& k, const std::vector<Simplex>& boundary) {
  std::vector<std::size_t> cols;
  for (const auto& t : boundary) {
    const std::size_t i = k.index_of(t);
    cols.push_back(x_index(i));
    cols.push_back(y_index(i));
  }
  return cols;
}

struct SideCheck {
  Subspace restricted;
  std::size_t inner_dim;
  bool inner_generated;
};

SideCheck check_side(const std::vector<Simplex>& pentachora, const std::vector<Simplex>& boundary, const Field& f) {
  const Triangulation k(6, pentachora);
  const auto cols = boundary_columns(k, boundary);
  const Subspace v = permitted_space(k, f);
  const Subspace restricted = Subspace::span(v.basis().select_columns(cols));

  Matrix constraints = functional_matrix(k, f);
  for (std::size_t c : cols) {
    Vector e(constraints.cols(), 0);
    e[c] = 1;
    constraints.append_row(e);
  }
  const Subspace inner = Subspace::kernel(constraints);

  const std::set<Simplex> on_boundary(boundary.begin(), boundary.end());
  std::vector<Vector> inner_psi;
  for (const auto& e : k.simplices(1)) {
    bool touches = false;
    for (const auto& t : boundary)
      if (is_face_of(e, t)) {
        touches = true;
        break;
      }
    if (!touches) inner_psi.push_back(edge_vector(k, f, e));
  }
  const Subspace generated = Subspace::span(f, constraints.cols(), inner_psi);
  return {restricted, inner.dim(), generated == inner};
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

MoveCluster cluster(int k, const std::vector<int>& dropped) {
  if (k < 1 || k > 5) throw InputError("k must be between 1 and 5");
  std::set<int> s(dropped.begin(), dropped.end());
  if (static_cast<int>(s.size()) != k || static_cast<int>(dropped.size()) != k)
    throw InputError("selection must name " + std::to_string(k) + " distinct facets");
  for (int v : s)
    if (v < 1 || v > 6) throw InputError("facets of 123456 are named by the omitted vertex 1..6");
  MoveCluster c;
  c.k = k;
  c.dropped.assign(s.begin(), s.end());
  for (int v = 1; v <= 6; ++v) (s.count(v) ? c.lhs : c.rhs).push_back(without(kDelta5, v));
  c.boundary = boundary_tetrahedra(c.lhs);
  return c;
}

std::vector<MoveCluster> all_clusters() {
  std::vector<MoveCluster> out;
  for (int k = 1; k <= 5; ++k) {
    std::vector<bool> pick(6, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<int> s;
      for (int i = 0; i < 6; ++i)
        if (pick[i]) s.push_back(i + 1);
      out.push_back(cluster(k, s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

int expected_inner_dim(int k) {
  static constexpr int a[] = {0, 0, 0, 1, 3};
  if (k < 1 || k > 5) throw InputError("k must be between 1 and 5");
  return a[k - 1];
}

Theorem1Report verify_theorem1(int k, const std::vector<int>& dropped, const Field& f) {
  const MoveCluster c = cluster(k, dropped);
  Theorem1Report rep;
  rep.k = k;
  rep.dropped = c.dropped;
  const SideCheck l = check_side(c.lhs, c.boundary, f);
  const SideCheck r = check_side(c.rhs, c.boundary, f);
  rep.restriction_match = l.restricted == r.restricted && boundary_tetrahedra(c.rhs) == c.boundary;

  // psi_b restricted to the boundary only sees the tetrahedra of b, so the
  // whole simplex 123456 can host the edge vectors.
  const Triangulation full = Triangulation::standard_simplex(5);
  std::vector<std::size_t> cols = boundary_columns(full, c.boundary);
  std::vector<Vector> psi;
  for (const auto& e : full.simplices(1)) {
    const Vector v = edge_vector(full, f, e);
    Vector r2;
    for (auto i : cols) r2.push_back(v[i]);
    psi.push_back(r2);
  }
  rep.boundary_generated = Subspace::span(f, cols.size(), psi) == l.restricted;

  rep.inner_dim_lhs = l.inner_dim;
  rep.inner_dim_rhs = r.inner_dim;
  rep.inner_generated_lhs = l.inner_generated;
  rep.inner_generated_rhs = r.inner_generated;
  rep.pass = rep.restriction_match && rep.boundary_generated && l.inner_generated && r.inner_generated &&
             static_cast<int>(l.inner_dim) == expected_inner_dim(k) &&
             static_cast<int>(r.inner_dim) == expected_inner_dim(6 - k);
  return rep;
}

std::string MoveApplication::describe() const {
  return std::to_string(k()) + "-" + std::to_string(6 - k()) + " on {" + join(vertices) + "} dropping {" +
         join(dropped) + "}";
}

Triangulation apply_move(const Triangulation& host, const MoveApplication& move) {
  if (host.dim() != 4) throw InputError("Pachner moves act on 4-dimensional triangulations");
  const int k = move.k();
  Simplex w = move.vertices;
  std::sort(w.begin(), w.end());
  if (w.size() != 6 || std::adjacent_find(w.begin(), w.end()) != w.end())
    throw InputError("a move needs six distinct vertices");
  if (k < 1 || k > 5) throw InputError("a move drops between 1 and 5 vertices");
  const std::set<int> s(move.dropped.begin(), move.dropped.end());
  if (static_cast<int>(s.size()) != k) throw InputError("dropped vertices repeat");
  for (int v : s)
    if (!std::binary_search(w.begin(), w.end(), v)) throw InputError("dropped vertex is not among the six");

  const int fresh = host.num_vertices() + 1;
  if (k == 1) {
    if (*s.begin() != fresh) throw DomainError("a 1-5 move must drop the fresh vertex " + std::to_string(fresh));
  }
  for (int v : w)
    if (v < 1 || v > (k == 1 ? fresh : host.num_vertices()))
      throw InputError("vertex " + std::to_string(v) + " is outside the host");

  Simplex tau, sset;
  for (int v : w) (s.count(v) ? sset : tau).push_back(v);
  std::vector<Simplex> lhs, rhs;
  for (int v : w) (s.count(v) ? lhs : rhs).push_back(without(w, v));

  for (const auto& p : lhs)
    if (!host.contains(p)) throw DomainError("pentachoron " + simplex_label(p) + " is not in the host");
  if (k >= 2) {
    if (host.star_facets(tau).size() != static_cast<std::size_t>(k))
      throw DomainError("the star of " + simplex_label(tau) + " is not the left-hand side of the move");
    if (host.contains(sset)) throw DomainError("simplex " + simplex_label(sset) + " already exists in the host");
  }

  std::set<Simplex> removed(lhs.begin(), lhs.end());
  std::vector<Simplex> facets;
  for (const auto& p : host.facets())
    if (!removed.count(p)) facets.push_back(p);
  facets.insert(facets.end(), rhs.begin(), rhs.end());
  Triangulation out(k == 1 ? fresh : host.num_vertices(), std::move(facets));
  if (k == 5) out = compactify(out);
  const auto closed = validate_closed(out);
  if (!closed.passed) throw DomainError("move produced an invalid complex: " + closed.failures.front());
  return out;
}

std::vector<MoveApplication> available_moves(const Triangulation& host, int k) {
  if (k < 1 || k > 5) throw InputError("k must be between 1 and 5");
  std::vector<MoveApplication> out;
  if (k == 1) {
    const int fresh = host.num_vertices() + 1;
    for (const auto& p : host.facets()) {
      Simplex w = p;
      w.push_back(fresh);
      out.push_back({w, {fresh}});
    }
    return out;
  }
  for (const auto& tau : host.simplices(5 - k)) {
    const auto star = host.star_facets(tau);
    if (star.size() != static_cast<std::size_t>(k)) continue;
    std::set<int> w;
    for (auto i : star) w.insert(host.facets()[i].begin(), host.facets()[i].end());
    if (w.size() != 6) continue;
    Simplex sset;
    for (int v : w)
      if (!std::binary_search(tau.begin(), tau.end(), v)) sset.push_back(v);
    if (host.contains(sset)) continue;
    out.push_back({Simplex(w.begin(), w.end()), sset});
  }
  return out;
}

MoveApplication random_move(const Triangulation& host, const std::vector<int>& ks, std::mt19937_64& rng) {
  std::vector<MoveApplication> all;
  for (int k : ks) {
    auto m = available_moves(host, k);
    all.insert(all.end(), m.begin(), m.end());
  }
  if (all.empty()) throw DomainError("no legal move of the requested kinds");
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

}  // namespace hexcol
