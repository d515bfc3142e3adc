#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "algebra/field.hpp"
#include "complex/triangulation.hpp"

namespace hexcol {

// k of the six facets of the boundary of 123456, named by the vertices they
// omit, and the complementary 6-k facets.
struct MoveCluster {
  int k = 0;
  std::vector<int> dropped;        // the k omitted vertices, ascending
  std::vector<Simplex> lhs;        // C
  std::vector<Simplex> rhs;        // complement of C
  std::vector<Simplex> boundary;   // tetrahedra of the common boundary
};

MoveCluster cluster(int k, const std::vector<int>& dropped);
// All nonempty proper selections, ordered by k then lexicographically.
std::vector<MoveCluster> all_clusters();

// Inner-coloring dimensions a_1..a_5.
int expected_inner_dim(int k);

struct Theorem1Report {
  int k = 0;
  std::vector<int> dropped;
  bool restriction_match = false;    // V_C and V_Cbar restrict to the same boundary colorings
  bool boundary_generated = false;   // ... spanned by boundary edge vectors
  std::size_t inner_dim_lhs = 0;
  std::size_t inner_dim_rhs = 0;
  bool inner_generated_lhs = false;  // inner colorings spanned by inner edge vectors
  bool inner_generated_rhs = false;
  bool pass = false;
};

Theorem1Report verify_theorem1(int k, const std::vector<int>& dropped, const Field& f);

// A k-(6-k) move: `vertices` are the six vertices W of the move (ascending);
// `dropped` the k of them whose omission gives the pentachora C removed from
// the host. For 1-5 moves, W contains the fresh vertex num_vertices + 1 and
// dropped = {fresh}.
struct MoveApplication {
  std::vector<int> vertices;
  std::vector<int> dropped;

  int k() const { return static_cast<int>(dropped.size()); }
  std::string describe() const;
};

// Throws DomainError if the move does not fit the host at that location.
Triangulation apply_move(const Triangulation& host, const MoveApplication& move);

// Every legal k-(6-k) move on the host, in a deterministic order.
std::vector<MoveApplication> available_moves(const Triangulation& host, int k);

// Uniform choice among all legal moves whose k is listed in `ks`.
MoveApplication random_move(const Triangulation& host, const std::vector<int>& ks, std::mt19937_64& rng);

}  // namespace hexcol
