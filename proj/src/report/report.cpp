#include "report/report.hpp"

#include "coloring/coloring.hpp"
#include "common/errors.hpp"
#include "complex/fixtures.hpp"
#include "complex/io.hpp"
#include "hexagon/cohomology.hpp"
#include "homology/homology.hpp"
#include "invariants/invariants.hpp"

namespace hexcol {

namespace {

const char* const kBasisNote =
    "Polynomials are written in the canonical basis of H_col (coset representatives in reduced echelon form) "
    "and, for degree 3, the canonical basis of H^3. They change under an invertible substitution of X and X'; "
    "value distributions, bilinear ranks and the q = r verdict do not.";

bool is_builtin(const std::string& s) {
  for (const auto& n : builtin_cocycle_names())
    if (n == s) return true;
  return false;
}

}  // namespace

Json polynomial_terms(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"coeff", p.field().format(c)}, {"exponents", m}});
  return terms;
}

Json report_header(const RunConfig& cfg, const Field& f, const Triangulation* k) {
  return {{"tool", "hexcol"},
          {"version", HEXCOL_VERSION},
          {"command", cfg.command},
          {"field", f.spec()},
          {"seed", cfg.seed},
          {"manifold", cfg.manifold},
          {"fixture_hash", k ? fingerprint(*k) : std::string()}};
}

Json homology_report(const RunConfig& cfg, const Triangulation& k, const Field& f) {
  Json r = report_header(cfg, f, &k);
  const auto h = coloring_homology(k, f);
  std::vector<std::size_t> b;
  for (int n = 0; n <= k.dim(); ++n) b.push_back(betti(k, n, f));
  r["counts"] = k.f_vector();
  r["dim_V"] = h.permitted().dim();
  r["dim_V0"] = h.edge_generated().dim();
  r["d"] = h.d();
  r["betti"] = b;
  if (k.dim() >= 3) {
    r["h2"] = b[2];
    r["h3"] = b[3];
    r["formula_holds"] = h.d() == b[2] + b[3];
  }
  return r;
}

Json invariants_report(const RunConfig& cfg, const Triangulation& k, const Field& f,
                       const std::vector<std::string>& cocycles) {
  if (cocycles.empty()) throw InputError("no cocycles requested");
  Json r = report_header(cfg, f, &k);
  const auto h = coloring_homology(k, f);
  const GenericColoring g{h.lifts()};
  r["d"] = g.d();
  r["basis_note"] = kBasisNote;

  Json polys = Json::array();
  Json dists = Json::array();
  Json skipped = Json::array();
  std::vector<InvariantPolynomial> q, rr;
  bool have_q = false, have_r = false;
  int literal = 0;
  for (const auto& entry : cocycles) {
    const bool builtin = is_builtin(entry);
    const HexCochain c = builtin ? builtin_cocycle(entry, f) : parse_cochain(entry, f);
    const std::string name = builtin ? invariant_name(entry) : "g" + std::to_string(++literal);
    const auto out = gcol_with_lifts(k, c, g, name);
    if (entry == "c4_cubic_1") {
      q = out;
      have_q = true;
    }
    if (entry == "c4_cubic_2") {
      rr = out;
      have_r = true;
    }
    for (const auto& p : out) {
      Json item{{"name", p.name},
                {"cocycle", builtin ? entry : c.to_string()},
                {"degree", p.target_degree},
                {"bilinear", p.bilinear},
                {"text", p.to_string()},
                {"variables", invariant_variable_names(p.d(), p.bilinear)},
                {"terms", polynomial_terms(p.poly)}};
      if (p.bilinear) item["bilinear_rank"] = bilinear_rank(p.poly);
      polys.push_back(item);
      for (int e = 1; e <= cfg.max_extension; ++e) {
        if (e > 1 && !f.is_prime()) break;
        const Field ext = Field::make(f.characteristic(), f.degree() * e);
        try {
          const auto vd = value_distribution(p.poly, ext, cfg.enumeration_cap);
          Json counts = Json::object();
          for (const auto& [v, n] : vd.counts) counts[ext.format(v)] = n;
          dists.push_back({{"poly", p.name}, {"k", e}, {"field", ext.spec()}, {"counts", counts}});
        } catch (const ResourceError& err) {
          skipped.push_back({{"poly", p.name}, {"k", e}, {"reason", err.what()}});
          break;
        }
      }
    }
  }
  r["polynomials"] = polys;
  r["distributions"] = dists;
  r["distributions_skipped"] = skipped;
  if (have_q && have_r) {
    bool eq = q.size() == rr.size();
    for (std::size_t i = 0; eq && i < q.size(); ++i) eq = q[i].poly == rr[i].poly;
    r["q_eq_r"] = eq;
  } else {
    r["q_eq_r"] = nullptr;
  }
  return r;
}

Json search_report(const RunConfig& cfg, int level, unsigned degree, CochainKind kind, const Field& f) {
  Json r = report_header(cfg, f, nullptr);
  const auto rep = hex_cohomology(level, degree, f, kind, cfg.search_cap);
  r["level"] = level;
  r["max_degree"] = degree;
  r["kind"] = to_string(kind);
  Json pieces = Json::array();
  for (const auto& p : rep.pieces)
    pieces.push_back({{"degree", p.degree},
                      {"monomials", p.monomials.size()},
                      {"cocycles", p.cocycles},
                      {"coboundaries", p.coboundaries},
                      {"cohomology", p.cohomology()}});
  r["pieces"] = pieces;
  r["top"] = {{"degree", rep.top().degree},
              {"cocycles", rep.top().cocycles},
              {"coboundaries", rep.top().coboundaries},
              {"cohomology", rep.top().cohomology()}};
  r["total"] = {{"cocycles", rep.total_cocycles()},
                {"coboundaries", rep.total_coboundaries()},
                {"cohomology", rep.total_cohomology()}};
  Json reps = Json::array();
  for (const auto& c : rep.representatives()) {
    if (reps.size() >= 50) break;
    reps.push_back(c.to_string());
  }
  r["representatives"] = reps;

  Json located = Json::array();
  std::vector<HexCochain> found;
  for (const auto& name : builtin_cocycle_names()) {
    HexCochain c = HexCochain::zero(level, kind, f);
    try {
      c = builtin_cocycle(name, f);
    } catch (const DomainError&) {
      continue;
    }
    if (c.level() != level || c.kind() != kind) continue;
    try {
      const Vector coords = rep.class_coordinates(c);
      Json coord = Json::array();
      for (Elem e : coords) coord.push_back(f.format(e));
      located.push_back({{"name", name}, {"coordinates", coord}, {"nontrivial", !is_zero(coords)}});
      found.push_back(c);
    } catch (const DomainError& e) {
      located.push_back({{"name", name}, {"outside", e.what()}});
    }
  }
  r["builtins"] = located;
  if (!found.empty()) r["builtins_independent"] = rep.independent(found);
  return r;
}

Json fixtures_report() {
  Json list = Json::array();
  for (const auto& fx : fixture_list()) {
    Json item{{"name", fx.name}, {"description", fx.description}, {"dim", fx.dim}, {"available", fx.available}};
    if (fx.available) {
      const auto k = fixture(fx.name);
      item["vertices"] = k.num_vertices();
      item["facets"] = k.count(k.dim());
      item["fixture_hash"] = fingerprint(k);
    }
    list.push_back(item);
  }
  return {{"tool", "hexcol"}, {"version", HEXCOL_VERSION}, {"command", "fixtures"}, {"fixtures", list}};
}

Json verify_report(const RunConfig& cfg, const std::string& suite, const Field& f, const Triangulation* k) {
  Json body;
  auto need = [&]() -> const Triangulation& {
    if (!k) throw InputError("suite " + suite + " needs a complex (--fixture or --input)");
    return *k;
  };
  if (suite == "cocycles") {
    body = verify_cocycles(f);
  } else if (suite == "pachner") {
    body = verify_pachner(f);
  } else if (suite == "chainmap") {
    body = verify_chainmap(need(), f, cfg.trials, cfg.seed);
  } else if (suite == "classdep") {
    body = verify_classdep(need(), f, cfg.trials, cfg.seed);
  } else if (suite == "limit") {
    body = verify_limit(f, cfg.trials, cfg.seed);
  } else if (suite == "moves") {
    body = verify_moves(need(), f, cfg.trials, 6, cfg.seed, cfg.max_extension);
  } else {
    throw InputError("unknown suite '" + suite + "' (cocycles, pachner, chainmap, classdep, limit, moves)");
  }
  Json r = report_header(cfg, f, k);
  r.update(body);
  return r;
}

Json limit_check_report(const RunConfig& cfg, const Field& f) {
  Json r = report_header(cfg, f, nullptr);
  r.update(verify_limit(f, cfg.trials, cfg.seed));
  return r;
}

}  // namespace hexcol
