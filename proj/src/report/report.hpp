#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "complex/triangulation.hpp"
#include "report/suites.hpp"

namespace hexcol {

struct RunConfig {
  std::string command;
  std::string manifold;  // fixture name or input path
  std::uint64_t seed = 1;
  int max_extension = 2;
  std::uint64_t enumeration_cap = std::uint64_t{1} << 20;
  std::size_t search_cap = 200000;
  int trials = 100;
};

// Fields shared by every report: tool, version, command, field, seed and the
// fingerprint of the complex (empty when there is none).
Json report_header(const RunConfig& cfg, const Field& f, const Triangulation* k);

Json homology_report(const RunConfig& cfg, const Triangulation& k, const Field& f);

// `cocycles` entries are builtin names or cochain literals.
Json invariants_report(const RunConfig& cfg, const Triangulation& k, const Field& f,
                       const std::vector<std::string>& cocycles);

Json search_report(const RunConfig& cfg, int level, unsigned degree, CochainKind kind, const Field& f);

Json fixtures_report();

// suite: cocycles, pachner, chainmap, classdep, limit, moves. `k` is needed by
// chainmap, classdep and moves.
Json verify_report(const RunConfig& cfg, const std::string& suite, const Field& f, const Triangulation* k);

Json limit_check_report(const RunConfig& cfg, const Field& f);

// Monomial terms of a polynomial in graded-lex order: [{"coeff", "exponents"}].
Json polynomial_terms(const MPoly& p);

}  // namespace hexcol
