#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swapgraph/word.hpp"

namespace swapgraph::structure {

// n - max_i P[i].
std::uint64_t diameter_formula(const ParikhVector& p);

// max_i P[i] + 1; 1 when at most one symbol occurs (single-vertex graph).
std::uint64_t clique_number(const ParikhVector& p);

// Sum over j of prod_{i != j} P[i], as printed for the per-vertex count of
// maximal cliques. Not guaranteed to match the oracle; see the clique report.
BigInt cliques_per_vertex(const ParikhVector& p);

// Per-vertex maximal-clique count derived from the clique construction:
// for an ordered pair (x, y) of distinct symbols, each occurrence of x
// spans one clique with the P[y] words obtained by swapping it with an
// occurrence of y. That clique is maximal when P[y] >= 2; when P[y] == 1
// it is an edge that lies inside the (y, x) clique, unless P[x] == 1 too,
// in which case the edge itself is maximal and counted once.
BigInt cliques_per_vertex_derived(const ParikhVector& p);

// Sum over ordered pairs (i, j), i != j, of the multinomial of the counts
// outside {i, j}. Evaluated exactly as printed; compared against the oracle
// rather than trusted.
BigInt total_maximal_cliques_paper(const ParikhVector& p);

struct WitnessPair {
  Word w;
  Word v;
  // relabel[r] is the original symbol that plays the role of symbol r + 1
  // in the non-increasing ordering.
  std::vector<Symbol> relabel;
};

// Block construction (1 2 .. s)^{P[s]} (1 2 .. s-1)^{P[s-1]-P[s]} ... with v
// the block-wise cyclic shift of w, after relabeling so counts are
// non-increasing (ties keep the smaller symbol first).
WitnessPair witness_pair(const ParikhVector& p);

// pi with u[pi[k]] = v[k], pairing the m-th occurrence of each symbol in v
// with its m-th occurrence in u. 1-based. kParikhMismatch on differing
// Parikh vectors.
std::vector<Position> canonical_ball_map(const Word& u, const Word& v);

// Another pi with u[pi[k]] = v[k]: occurrences of each symbol are matched
// by a seeded random bijection instead of in order.
std::vector<Position> sampled_ball_map(const Word& u, const Word& v, std::uint64_t seed);

// "P formula=X oracle=Y match=bool"
std::string clique_comparison_line(const ParikhVector& p, const BigInt& formula,
                                   const BigInt& oracle);

}  // namespace swapgraph::structure
