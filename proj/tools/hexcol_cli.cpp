// hexcol command-line frontend. Talks to the library only through hexcol.h.
#include <hexcol/hexcol.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

using Json = nlohmann::json;

namespace {

struct Failure {
  hexcol_status status;
  std::string message;
};

void check(hexcol_status s) {
  if (s != HEXCOL_OK && s != HEXCOL_VERIFY_FAILED) throw Failure{s, hexcol_last_error()};
}

struct FieldDeleter {
  void operator()(hexcol_field* f) const { hexcol_field_free(f); }
};
struct ComplexDeleter {
  void operator()(hexcol_complex* k) const { hexcol_complex_free(k); }
};
using FieldPtr = std::unique_ptr<hexcol_field, FieldDeleter>;
using ComplexPtr = std::unique_ptr<hexcol_complex, ComplexDeleter>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  hexcol_string_free(s);
  return out;
}

struct Options {
  std::string field = "2";
  std::string fixture;
  std::string input;
  std::string cocycles;
  std::string cocycle_file;
  std::string out = "text";
  std::uint64_t seed = 1;
  int max_extension = 2;
  int degree = 3;
  int level = 4;
  std::string kind = "polynomial";
  int trials = 100;
  std::uint64_t enumeration_cap = std::uint64_t{1} << 20;
  std::uint64_t search_cap = 200000;
  std::string suite;
  std::string left, right;

  hexcol_options api() const {
    hexcol_options o;
    hexcol_options_default(&o);
    o.seed = seed;
    o.max_extension = max_extension;
    o.trials = trials;
    o.enumeration_cap = enumeration_cap;
    o.search_cap = search_cap;
    return o;
  }
  std::string manifold() const { return fixture.empty() ? input : fixture; }
};

FieldPtr make_field(const std::string& spec) {
  hexcol_field* f = nullptr;
  check(hexcol_field_create(spec.c_str(), &f));
  return FieldPtr(f);
}

ComplexPtr complex_from(const std::string& fixture, const std::string& input) {
  hexcol_complex* k = nullptr;
  if (!fixture.empty()) {
    check(hexcol_complex_fixture(fixture.c_str(), &k));
  } else if (!input.empty()) {
    check(hexcol_complex_load(input.c_str(), &k));
  }
  return ComplexPtr(k);
}

ComplexPtr require_complex(const Options& o) {
  auto k = complex_from(o.fixture, o.input);
  if (!k) throw Failure{HEXCOL_INPUT_ERROR, "a complex is required (--fixture NAME or --input PATH)"};
  return k;
}

// A product operand is a fixture name unless a file of that name exists.
ComplexPtr operand(const std::string& s) {
  std::ifstream probe(s);
  return probe ? complex_from("", s) : complex_from(s, "");
}

std::string field_label(const std::string& spec) {
  const auto caret = spec.find('^');
  if (caret == std::string::npos) return "F" + spec;
  unsigned long q = 1;
  const unsigned long p = std::stoul(spec.substr(0, caret));
  for (unsigned long i = 0, k = std::stoul(spec.substr(caret + 1)); i < k; ++i) q *= p;
  return "F" + std::to_string(q);
}

std::string header(const Json& r) {
  const std::string m = r.value("manifold", "");
  return "M = " + (m.empty() ? std::string("-") : m) + ", F = " + field_label(r["field"]) + "\n";
}

std::string join(const Json& arr, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

std::string render_homology(const Json& r) {
  std::ostringstream os;
  os << header(r);
  os << "N = (" << join(r["counts"], ", ") << ")\n";
  os << "dim V = " << r["dim_V"] << ", dim V0 = " << r["dim_V0"] << "\n";
  os << "d = " << r["d"] << "\n";
  if (r.contains("h2")) {
    os << "dim H2 = " << r["h2"] << ", dim H3 = " << r["h3"] << "\n";
    os << "d = dim H2 + dim H3: " << (r["formula_holds"].get<bool>() ? "holds" : "fails") << "\n";
  }
  return os.str();
}

std::string render_counts(const Json& counts) {
  std::string s;
  for (const auto& [v, n] : counts.items()) s += (s.empty() ? "" : ", ") + v + ":" + n.dump();
  return "{" + s + "}";
}

std::string render_invariants(const Json& r) {
  std::ostringstream os;
  os << header(r);
  os << "d = " << r["d"] << "\n";
  const bool eq = r["q_eq_r"].is_boolean() && r["q_eq_r"].get<bool>();
  std::string last_cocycle;
  for (const auto& p : r["polynomials"]) {
    if (eq && p["name"] == "r") {
      os << "r = q\n";
      continue;
    }
    os << p["name"].get<std::string>() << " = " << p["text"].get<std::string>();
    if (p.contains("bilinear_rank")) os << "    (rank " << p["bilinear_rank"] << ")";
    os << "\n";
  }
  if (r["polynomials"].empty()) os << "(no polynomials)\n";
  if (!r["distributions"].empty()) {
    os << "value distributions:\n";
    for (const auto& d : r["distributions"])
      os << "  " << d["poly"].get<std::string>() << " over " << field_label(d["field"]) << ": "
         << render_counts(d["counts"]) << "\n";
  }
  for (const auto& s : r["distributions_skipped"])
    os << "  " << s["poly"].get<std::string>() << " k=" << s["k"] << " skipped: " << s["reason"].get<std::string>()
       << "\n";
  if (r["q_eq_r"].is_boolean()) os << "q = r: " << (eq ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_verify(const Json& r) {
  std::ostringstream os;
  os << "suite " << r["suite"].get<std::string>() << ", F = " << field_label(r["field"]);
  if (!r.value("manifold", "").empty()) os << ", M = " << r["manifold"].get<std::string>();
  os << ", seed " << r["seed"] << "\n";
  os << "trials " << r["trials"] << ", failures " << r["failures"] << "\n";
  if (r.contains("failed"))
    for (const auto& f : r["failed"]) os << "  failed: " << f.dump() << "\n";
  if (r.contains("cases"))
    for (const auto& c : r["cases"])
      if (!c.value("pass", true)) os << "  failed: " << c.dump() << "\n";
  os << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_search(const Json& r) {
  std::ostringstream os;
  os << "level " << r["level"] << ", " << r["kind"].get<std::string>() << " cochains up to degree "
     << r["max_degree"] << ", F = " << field_label(r["field"]) << "\n";
  os << "degree  monomials  cocycles  coboundaries  cohomology\n";
  for (const auto& p : r["pieces"]) {
    char line[96];
    std::snprintf(line, sizeof line, "%6d  %9zu  %8zu  %12zu  %10zu\n", p["degree"].get<int>(),
                  p["monomials"].get<std::size_t>(), p["cocycles"].get<std::size_t>(),
                  p["coboundaries"].get<std::size_t>(), p["cohomology"].get<std::size_t>());
    os << line;
  }
  os << "top degree: cohomology " << r["top"]["cohomology"] << "\n";
  os << "all degrees: cohomology " << r["total"]["cohomology"] << "\n";
  for (const auto& b : r["builtins"]) {
    os << "  " << b["name"].get<std::string>() << ": ";
    if (b.contains("coordinates")) {
      os << "[" << join(b["coordinates"], " ") << "]" << (b["nontrivial"].get<bool>() ? " nontrivial" : " trivial");
    } else {
      os << "not in this space";
    }
    os << "\n";
  }
  if (r.contains("builtins_independent"))
    os << "builtin classes independent: " << (r["builtins_independent"].get<bool>() ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_fixtures(const Json& r) {
  std::ostringstream os;
  for (const auto& f : r["fixtures"]) {
    char line[160];
    if (f["available"].get<bool>()) {
      std::snprintf(line, sizeof line, "%-9s dim %d  %4zu vertices  %5zu facets  %s\n",
                    f["name"].get<std::string>().c_str(), f["dim"].get<int>(), f["vertices"].get<std::size_t>(),
                    f["facets"].get<std::size_t>(), f["description"].get<std::string>().c_str());
    } else {
      std::snprintf(line, sizeof line, "%-9s unavailable  %s\n", f["name"].get<std::string>().c_str(),
                    f["description"].get<std::string>().c_str());
    }
    os << line;
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{HEXCOL_INPUT_ERROR, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Calls a report function and prints the result in the requested format.
template <class Call, class Render>
int report(const Options& o, Call&& call, Render&& render) {
  char* raw = nullptr;
  const hexcol_status s = call(&raw);
  check(s);
  const std::string text = take(raw);
  if (o.out == "json") {
    std::cout << text << "\n";
  } else {
    std::cout << render(Json::parse(text));
  }
  return s;
}

void common_flags(CLI::App* c, Options& o, bool complex) {
  c->add_option("--field", o.field, "field p or p^k")->capture_default_str();
  c->add_option("--out", o.out, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  c->add_option("--seed", o.seed, "random seed")->capture_default_str();
  if (complex) {
    auto* fx = c->add_option("--fixture", o.fixture, "builtin fixture name");
    auto* in = c->add_option("--input", o.input, "triangulation file (text or JSON)");
    fx->excludes(in);
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Coloring homology and invariants of triangulated 4-manifolds"};
  app.set_version_flag("--version", std::string(hexcol_version()));
  app.require_subcommand(1);

  auto* homology = app.add_subcommand("homology", "permitted colorings, d and the cohomology check");
  common_flags(homology, o, true);

  auto* invariants = app.add_subcommand("invariants", "polynomial invariants g_col and value distributions");
  common_flags(invariants, o, true);
  auto* cl = invariants->add_option("--cocycles", o.cocycles, "comma-separated builtin names or literals");
  auto* cf = invariants->add_option("--cocycle-file", o.cocycle_file, "one cocycle per line");
  cl->excludes(cf);
  invariants->add_option("--max-extension", o.max_extension, "distributions over F_{q^k}, k up to this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  invariants->add_option("--enumeration-cap", o.enumeration_cap, "points per value distribution")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "property suites");
  verify->add_option("suite", o.suite, "cocycles, pachner, chainmap, classdep, limit, moves")->required();
  common_flags(verify, o, true);
  verify->add_option("--trials", o.trials, "random trials (sequences for moves)")->capture_default_str();
  verify->add_option("--max-extension", o.max_extension, "moves: distributions up to this extension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* search = app.add_subcommand("search", "cohomology of hexagon cochains");
  common_flags(search, o, false);
  search->add_option("--level", o.level, "simplex level (3 or 4)")->capture_default_str();
  search->add_option("--degree", o.degree, "maximal degree")->capture_default_str();
  search->add_option("--kind", o.kind, "polynomial or bilinear")
      ->check(CLI::IsMember({"polynomial", "bilinear"}))
      ->capture_default_str();
  search->add_option("--search-cap", o.search_cap, "maximal monomial count")->capture_default_str();

  auto* product = app.add_subcommand("product", "staircase product of two complexes (fixture names or files)");
  product->add_option("left", o.left)->required();
  product->add_option("right", o.right)->required();
  product->add_option("--out", o.out, "serialization")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* fixtures = app.add_subcommand("fixtures", "builtin fixtures");
  auto* fixtures_list = fixtures->add_subcommand("list", "list fixtures");
  fixtures->require_subcommand(1);
  fixtures_list->add_option("--out", o.out)->check(CLI::IsMember({"text", "json"}));

  auto* limit = app.add_subcommand("limit-check", "constant functionals as a limit of the nonconstant ones");
  common_flags(limit, o, false);
  limit->add_option("--trials", o.trials, "random generic cocycles")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : HEXCOL_INPUT_ERROR;
  }

  try {
    const hexcol_options opts = o.api();
    if (*homology) {
      auto f = make_field(o.field);
      auto k = require_complex(o);
      const std::string m = o.manifold();
      return report(o, [&](char** j) { return hexcol_homology_report(k.get(), f.get(), &opts, m.c_str(), j); },
                    render_homology);
    }
    if (*invariants) {
      auto f = make_field(o.field);
      auto k = require_complex(o);
      const std::string m = o.manifold();
      const std::string list = o.cocycle_file.empty() ? o.cocycles : read_file(o.cocycle_file);
      return report(o,
                    [&](char** j) {
                      return hexcol_invariants_report(k.get(), f.get(), list.c_str(), &opts, m.c_str(), j);
                    },
                    render_invariants);
    }
    if (*verify) {
      auto f = make_field(o.field);
      auto k = complex_from(o.fixture, o.input);
      const std::string m = o.manifold();
      return report(o,
                    [&](char** j) { return hexcol_verify_report(o.suite.c_str(), k.get(), f.get(), &opts, m.c_str(), j); },
                    render_verify);
    }
    if (*search) {
      auto f = make_field(o.field);
      return report(o, [&](char** j) { return hexcol_search_report(o.level, o.degree, o.kind.c_str(), f.get(), &opts, j); },
                    render_search);
    }
    if (*limit) {
      auto f = make_field(o.field);
      return report(o, [&](char** j) { return hexcol_limit_check_report(f.get(), &opts, j); }, render_verify);
    }
    if (*fixtures) {
      return report(o, [&](char** j) { return hexcol_fixtures_list(j); }, render_fixtures);
    }
    if (*product) {
      auto a = operand(o.left);
      auto b = operand(o.right);
      hexcol_complex* p = nullptr;
      check(hexcol_complex_product(a.get(), b.get(), &p));
      ComplexPtr prod(p);
      char* raw = nullptr;
      check(hexcol_complex_serialize(prod.get(), o.out.c_str(), &raw));
      std::cout << take(raw);
      return 0;
    }
  } catch (const Failure& e) {
    std::cerr << "hexcol: " << e.message << "\n";
    return e.status;
  } catch (const std::exception& e) {
    std::cerr << "hexcol: " << e.what() << "\n";
    return HEXCOL_INTERNAL_ERROR;
  }
  return HEXCOL_INPUT_ERROR;
}
