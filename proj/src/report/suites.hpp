#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <json.hpp>

#include "complex/triangulation.hpp"
#include "hexagon/hexagon.hpp"

namespace hexcol {

using Json = nlohmann::json;

// Random helpers shared by the suites and tests.
HexCochain random_cochain(int level, CochainKind kind, unsigned degree, const Field& f, std::mt19937_64& rng,
                          int terms = 6);
Vector random_vector_in(const Subspace& v, std::mt19937_64& rng);

// Every suite returns {"suite", "pass", "failures", ...}; failing cases are
// listed under "failed" (at most 20).
Json verify_cocycles(const Field& f);
Json verify_pachner(const Field& f);
// delta commutes with the chain map on random level-3 cochains and colorings.
Json verify_chainmap(const Triangulation& k, const Field& f, int trials, std::uint64_t seed);
// g_col is unchanged by edge-vector perturbations of the lifts (even trials)
// and by adding coboundaries to level-4 cocycles (odd trials).
Json verify_classdep(const Triangulation& k, const Field& f, int trials, std::uint64_t seed);
Json verify_limit(const Field& f, int trials, std::uint64_t seed);
// Random move sequences leave d, value distributions, bilinear ranks and the
// q = r verdict unchanged.
Json verify_moves(const Triangulation& k, const Field& f, int sequences, int length, std::uint64_t seed,
                  int max_extension);

// Sorted bilinear ranks of all nonzero linear combinations of the forms.
std::vector<std::size_t> combination_ranks(const std::vector<MPoly>& forms);

// Basis-independent summary of every builtin invariant available over f.
Json invariant_summary(const Triangulation& k, const Field& f, int max_extension);

}  // namespace hexcol
