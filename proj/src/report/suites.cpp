#include "report/suites.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "coloring/coloring.hpp"
#include "common/errors.hpp"
#include "invariants/invariants.hpp"
#include "limits/limits.hpp"
#include "pachner/pachner.hpp"

namespace hexcol {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

struct Tally {
  int trials = 0;
  int failures = 0;
  Json failed = Json::array();

  void record(bool ok, const Json& what) {
    ++trials;
    if (ok) return;
    ++failures;
    if (failed.size() < kMaxListedFailures) failed.push_back(what);
  }
};

Json finish(const std::string& suite, const Tally& t, Json extra = Json::object()) {
  extra["suite"] = suite;
  extra["trials"] = t.trials;
  extra["failures"] = t.failures;
  extra["failed"] = t.failed;
  extra["pass"] = t.failures == 0;
  return extra;
}

Elem random_nonzero(const Field& f, std::mt19937_64& rng) {
  return 1 + static_cast<Elem>(rng() % (f.order() - 1));
}

// Builtins that exist over f and can be paired on k.
std::vector<std::string> usable_cocycles(const Triangulation& k, const Field& f) {
  std::vector<std::string> out;
  bool top_ok = true;
  try {
    fundamental_cycles(k, f);
  } catch (const DomainError&) {
    top_ok = false;
  }
  for (const auto& name : builtin_cocycle_names()) {
    if (name.rfind("c4_cubic", 0) == 0 && f.characteristic() != 2) continue;
    if (name[1] == '4' && !top_ok) continue;
    out.push_back(name);
  }
  return out;
}

bool same_polys(const std::vector<InvariantPolynomial>& a, const std::vector<InvariantPolynomial>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].poly != b[i].poly) return false;
  return true;
}

}  // namespace

std::vector<std::size_t> combination_ranks(const std::vector<MPoly>& forms) {
  if (forms.empty()) return {};
  const Field& f = forms[0].field();
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    combos *= f.order();
    if (combos > (1u << 16)) throw ResourceError("too many combinations of bilinear forms");
  }
  std::vector<std::size_t> ranks;
  for (std::uint64_t code = 1; code < combos; ++code) {
    MPoly acc(f, forms[0].nvars());
    std::uint64_t c = code;
    for (const auto& p : forms) {
      const Elem coef = static_cast<Elem>(c % f.order());
      c /= f.order();
      if (coef) acc += p.scaled(coef);
    }
    ranks.push_back(acc.is_zero() ? 0 : bilinear_rank(acc));
  }
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

HexCochain random_cochain(int level, CochainKind kind, unsigned degree, const Field& f, std::mt19937_64& rng,
                          int terms) {
  const std::size_t n = StandardColorings::get(level, f).dim();
  const bool bil = kind == CochainKind::bilinear;
  MPoly p(f, bil ? 2 * n : n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(p.nvars(), 0);
    if (bil) {
      ++m[rng() % n];
      ++m[n + rng() % n];
    } else {
      for (unsigned e = 0; e < degree; ++e) ++m[rng() % n];
    }
    p.add_term(m, random_nonzero(f, rng));
  }
  return HexCochain(level, kind, p);
}

Vector random_vector_in(const Subspace& v, std::mt19937_64& rng) {
  const Field& f = v.field();
  Vector out(v.ambient_dim(), 0);
  for (std::size_t i = 0; i < v.dim(); ++i) out = add(f, out, scale(f, static_cast<Elem>(rng() % f.order()), v.basis_vector(i)));
  return out;
}

Json verify_cocycles(const Field& f) {
  Tally t;
  Json cases = Json::array();
  for (const auto& name : builtin_cocycle_names()) {
    Json c{{"name", name}};
    try {
      const auto h = builtin_cocycle(name, f);
      const bool ok = is_cocycle(h);
      c["level"] = h.level();
      c["kind"] = to_string(h.kind());
      c["cocycle"] = ok;
      t.record(ok, name);
    } catch (const DomainError& e) {
      c["skipped"] = e.what();
    } catch (const std::logic_error& e) {
      c["cocycle"] = false;
      t.record(false, name);
    }
    cases.push_back(c);
  }
  return finish("cocycles", t, {{"field", f.spec()}, {"cases", cases}});
}

Json verify_pachner(const Field& f) {
  Tally t;
  Json cases = Json::array();
  for (const auto& c : all_clusters()) {
    const auto r = verify_theorem1(c.k, c.dropped, f);
    Json item{{"k", r.k},
              {"selection", r.dropped},
              {"items",
               {{"restriction_match", r.restriction_match},
                {"boundary_generated", r.boundary_generated},
                {"inner_dims", {r.inner_dim_lhs, r.inner_dim_rhs}},
                {"expected_inner_dims", {expected_inner_dim(r.k), expected_inner_dim(6 - r.k)}},
                {"inner_generated", {r.inner_generated_lhs, r.inner_generated_rhs}}}},
              {"pass", r.pass}};
    t.record(r.pass, Json{{"k", r.k}, {"selection", r.dropped}});
    cases.push_back(item);
  }
  return finish("pachner", t, {{"field", f.spec()}, {"cases", cases}});
}

Json verify_chainmap(const Triangulation& k, const Field& f, int trials, std::uint64_t seed) {
  if (k.dim() < 4) throw InputError("the chain map check needs a 4-dimensional complex");
  std::mt19937_64 rng(seed);
  const Subspace v = permitted_space(k, f);
  Tally t;
  for (int i = 0; i < trials; ++i) {
    const bool bil = i % 2 == 1;
    const unsigned degree = bil ? 2 : 1 + static_cast<unsigned>(rng() % 3);
    const auto c = random_cochain(3, bil ? CochainKind::bilinear : CochainKind::polynomial, degree, f, rng);
    const Vector a = random_vector_in(v, rng);
    const Vector b = random_vector_in(v, rng);
    const Vector* second = bil ? &b : nullptr;
    const Vector lhs = chain_map(k, coboundary(c), a, second);
    const Vector rhs = simplicial_coboundary(k, 3, f, chain_map(k, c, a, second));
    t.record(lhs == rhs, Json{{"trial", i}, {"cochain", c.to_string()}});
  }
  return finish("chainmap", t, {{"field", f.spec()}, {"seed", seed}});
}

Json verify_classdep(const Triangulation& k, const Field& f, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto names = usable_cocycles(k, f);
  const auto h = coloring_homology(k, f);
  const GenericColoring base{h.lifts()};
  std::vector<HexCochain> cocycles;
  std::vector<std::vector<InvariantPolynomial>> reference;
  for (const auto& n : names) {
    cocycles.push_back(builtin_cocycle(n, f));
    reference.push_back(gcol_with_lifts(k, cocycles.back(), base));
  }
  const auto& edges = k.simplices(1);
  std::vector<std::size_t> level4;
  for (std::size_t i = 0; i < cocycles.size(); ++i)
    if (cocycles[i].level() == 4) level4.push_back(i);
  // even trials perturb a lift, odd trials shift a level-4 cocycle
  Tally lift, shift;
  for (int i = 0; i < trials && !cocycles.empty(); ++i) {
    if (i % 2 == 1 && !level4.empty()) {
      const std::size_t which = level4[rng() % level4.size()];
      const HexCochain& c = cocycles[which];
      const unsigned degree = static_cast<unsigned>(std::max(c.degree(), 0));
      const auto b = random_cochain(3, c.kind(), degree, f, rng);
      const bool ok = same_polys(gcol_with_lifts(k, c + coboundary(b), base), reference[which]);
      shift.record(ok, Json{{"trial", i}, {"cocycle", names[which]}, {"added", b.to_string()}});
      continue;
    }
    const std::size_t which = rng() % cocycles.size();
    GenericColoring g = base;
    Json info{{"trial", i}, {"cocycle", names[which]}};
    if (g.d() > 0) {
      const std::size_t j = rng() % g.d();
      const Simplex& e = edges[rng() % edges.size()];
      g.lifts[j] = add(f, g.lifts[j], scale(f, random_nonzero(f, rng), edge_vector(k, f, e)));
      info["lift"] = j;
      info["edge"] = simplex_label(e);
    }
    lift.record(same_polys(gcol_with_lifts(k, cocycles[which], g), reference[which]), info);
  }
  Tally all;
  all.trials = lift.trials + shift.trials;
  all.failures = lift.failures + shift.failures;
  for (const auto& x : lift.failed) all.failed.push_back(x);
  for (const auto& x : shift.failed)
    if (all.failed.size() < kMaxListedFailures) all.failed.push_back(x);
  return finish("classdep", all,
                {{"field", f.spec()},
                 {"seed", seed},
                 {"d", base.d()},
                 {"cocycles", names},
                 {"lift_perturbations", {{"trials", lift.trials}, {"failures", lift.failures}}},
                 {"coboundary_shifts", {{"trials", shift.trials}, {"failures", shift.failures}}}});
}

Json verify_limit(const Field& f, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  const Matrix constant = constant_functionals(f);
  std::optional<CocycleData2> first;
  bool witness = false;
  for (int i = 0; i < trials; ++i) {
    const auto rho = CocycleData2::random(f, 4, rng);
    const auto m = nonconstant_functionals(rho);
    const auto steps = limit_steps(m, rho);
    const bool ok = steps.intermediate == expected_intermediate(rho) && steps.result == constant &&
                    limit_one_shot(m, rho) == steps.result;
    t.record(ok, Json{{"trial", i}});
    if (!first) {
      first = rho;
    } else if (!witness && nonconstant_functionals(*first) != m) {
      witness = limit_transform(nonconstant_functionals(*first), *first) == steps.result;
    }
  }
  Json extra{{"field", f.spec()}, {"seed", seed}, {"nonuniqueness_witness", witness}};
  Tally edge;
  try {
    for (int i = 0; i < std::min(trials, 20); ++i) {
      const auto rep = edge_vector_limit_check(CocycleData2::random(f, 5, rng));
      edge.record(rep.pass, Json{{"trial", i}, {"nonconstant_dim", rep.nonconstant_dim}, {"limit_dim", rep.limit_dim}});
    }
    extra["edge_vectors"] = {{"trials", edge.trials}, {"failures", edge.failures}};
  } catch (const DomainError& e) {
    extra["edge_vectors"] = {{"skipped", e.what()}};
  }
  t.trials += edge.trials;
  t.failures += edge.failures;
  for (const auto& x : edge.failed) t.failed.push_back(x);
  if (trials > 1 && !witness) t.record(false, "no non-uniqueness witness");
  return finish("limit", t, extra);
}

Json invariant_summary(const Triangulation& k, const Field& f, int max_extension) {
  const auto h = coloring_homology(k, f);
  const GenericColoring g{h.lifts()};
  Json out{{"d", g.d()}};
  Json polys = Json::object();
  std::map<std::string, std::vector<InvariantPolynomial>> by_name;
  for (const auto& name : usable_cocycles(k, f)) {
    const auto ps = gcol_with_lifts(k, builtin_cocycle(name, f), g, invariant_name(name));
    by_name[name] = ps;
    for (const auto& p : ps) {
      Json s = Json::object();
      if (p.bilinear) s["rank"] = bilinear_rank(p.poly);
      Json dist = Json::object();
      for (int e = 1; e <= max_extension && (e == 1 || f.is_prime()); ++e) {
        const Field ext = Field::make(f.characteristic(), f.degree() * e);
        try {
          const auto vd = value_distribution(p.poly, ext);
          Json counts = Json::object();
          for (const auto& [val, n] : vd.counts) counts[ext.format(val)] = n;
          dist[std::to_string(e)] = counts;
        } catch (const ResourceError&) {
          break;
        }
      }
      s["distributions"] = dist;
      polys[p.name] = s;
    }
  }
  // degree-3 outputs also depend on the H^3 basis: keep the ranks of all
  // nonzero combinations instead
  std::vector<MPoly> p3;
  for (auto it = polys.begin(); it != polys.end();) {
    if (it.key().rfind("p3_", 0) == 0) {
      it = polys.erase(it);
    } else {
      ++it;
    }
  }
  if (by_name.count("c3_bilinear"))
    for (const auto& p : by_name["c3_bilinear"]) p3.push_back(p.poly);
  if (!p3.empty()) out["p3_rank_profile"] = combination_ranks(p3);
  out["polynomials"] = polys;
  if (by_name.count("c4_cubic_1") && by_name.count("c4_cubic_2"))
    out["q_eq_r"] = same_polys(by_name["c4_cubic_1"], by_name["c4_cubic_2"]);
  return out;
}

Json verify_moves(const Triangulation& k, const Field& f, int sequences, int length, std::uint64_t seed,
                  int max_extension) {
  Tally t;
  const Json reference = invariant_summary(k, f, max_extension);
  Json runs = Json::array();
  for (int s = 0; s < sequences; ++s) {
    const std::uint64_t run_seed = seed + static_cast<std::uint64_t>(s);
    std::mt19937_64 rng(run_seed);
    Triangulation cur = k;
    Json moves = Json::array();
    bool ok = true;
    for (int step = 0; step < length; ++step) {
      const auto m = random_move(cur, {1, 2, 3, 4, 5}, rng);
      cur = apply_move(cur, m);
      moves.push_back(m.describe());
      const Json now = invariant_summary(cur, f, max_extension);
      const bool same = now == reference;
      t.record(same, Json{{"seed", run_seed}, {"step", step}, {"move", m.describe()}});
      ok = ok && same;
    }
    runs.push_back({{"seed", run_seed}, {"moves", moves}, {"pentachora", cur.count(4)}, {"pass", ok}});
  }
  return finish("moves", t, {{"field", f.spec()}, {"reference", reference}, {"runs", runs}});
}

}  // namespace hexcol
