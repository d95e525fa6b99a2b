#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "swapgraph/oracle.hpp"
#include "swapgraph/word.hpp"

namespace swapgraph::pathfinder {

// Greedy upper-bound path from w to v. A maximum-count symbol stays put;
// every other symbol is routed in increasing order, pairing the k-th
// misplaced occurrence in the current word with the k-th unfilled target
// position in v. Emits at most n - max P[i] legal 2-swaps.
// kParikhMismatch when the words do not share a Parikh vector.
std::vector<Swap> greedy_path(const Word& w, const Word& v);

// Directed position graph: edge i -> j iff w[i] == v[j]. Self-loops allowed.
class SwapGraph {
 public:
  // kLengthMismatch / kParikhMismatch on incompatible words.
  SwapGraph(const Word& w, const Word& v);

  std::size_t size() const noexcept { return out_.size(); }
  const Word& source() const noexcept { return w_; }
  const Word& target() const noexcept { return v_; }
  // Successors of position i (1-based), ascending.
  const std::vector<Position>& successors(Position i) const { return out_[i - 1]; }
  bool has_edge(Position i, Position j) const;
  std::size_t edge_count() const noexcept;

  // "i j symbol" per edge, in (i, j) order.
  void write_edge_list(std::ostream& os) const;

 private:
  Word w_;
  Word v_;
  std::vector<std::vector<Position>> out_;
};

// Each cycle lists positions c1 -> c2 -> ... -> ck -> c1.
using Cycle = std::vector<Position>;
using CycleCover = std::vector<Cycle>;

// kInvalidCover unless the cycles are vertex-disjoint, cover every position
// and follow edges of g.
void check_cover(const SwapGraph& g, const CycleCover& cover);

// For each cycle (c1, ..., ck) emits the transpositions (c1, c2), (c1, c3),
// ..., (c1, ck): sum of (|c| - 1) entries. A cycle that visits two positions
// holding the same symbol yields an entry that exchanges equal symbols; such
// entries leave the word unchanged, so replay_transpositions is the
// matching replay.
std::vector<Swap> cycle_cover_to_swaps(const SwapGraph& g, const CycleCover& cover);

// Applies position transpositions, exchanging equal symbols as a no-op.
Word replay_transpositions(Word w, const std::vector<Swap>& swaps);

// Every vertex-disjoint cycle cover of g, by brute force over the
// symbol-preserving position bijections. Intended for n <= 8.
std::vector<CycleCover> all_cycle_covers(const SwapGraph& g);

// Oracle BFS on the implicit graph G(parikh(w)). kTooLarge when
// count_words exceeds max_vertices.
int exact_distance(const Word& w, const Word& v,
                   std::uint64_t max_vertices = oracle::kDefaultMaxVertices);

struct ProbeRecord {
  Word w;
  Word v;
  std::size_t greedy_len = 0;
  int exact_len = 0;
  bool match() const { return static_cast<int>(greedy_len) == exact_len; }
};

struct ProbeReport {
  ParikhVector parikh;
  bool exhaustive = false;
  std::vector<ProbeRecord> records;
  std::uint64_t matches = 0;
  std::uint64_t greedy_shorter = 0;  // must stay 0: greedy is a real path

  double match_rate() const;
  // One "w v greedy_len exact_len match" line per record, then a summary.
  void write(std::ostream& os, bool counterexamples_only = false) const;
  std::string summary() const;
};

// Compares greedy_path against exact distances. Exhaustive over all ordered
// pairs when count_words(p)^2 <= exhaustive_pairs, otherwise `samples`
// pairs drawn with a seeded generator.
ProbeReport probe_conjecture(const ParikhVector& p, std::uint64_t samples, std::uint64_t seed,
                             std::uint64_t exhaustive_pairs = 40'000,
                             std::uint64_t max_vertices = oracle::kDefaultMaxVertices);

}  // namespace swapgraph::pathfinder
