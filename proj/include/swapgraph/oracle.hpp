#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "swapgraph/word.hpp"

namespace swapgraph::oracle {

using VertexId = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxVertices = 100'000;

// Explicit configuration graph G(P). Vertex ids follow lexicographic order of
// the words, so ids are reproducible across runs. Read-only once built.
class ConfigGraph {
 public:
  // kTooLarge when count_words(p) exceeds max_vertices.
  static ConfigGraph build(const ParikhVector& p,
                           std::uint64_t max_vertices = kDefaultMaxVertices);

  const ParikhVector& parikh() const noexcept { return parikh_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Word& word(VertexId v) const { return vertices_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  bool adjacent(VertexId a, VertexId b) const;

  std::optional<VertexId> find(const Word& w) const;
  // kUnknownVertex when w is not a vertex.
  VertexId id(const Word& w) const;

  std::size_t edge_count() const noexcept;

  // "id: word: n1 n2 ..." per vertex.
  void write_adjacency(std::ostream& os) const;
  // One "a b" line per undirected edge, a < b.
  void write_edge_list(std::ostream& os) const;

 private:
  ParikhVector parikh_;
  std::vector<Word> vertices_;
  std::vector<std::vector<VertexId>> adjacency_;  // sorted
  std::map<Word, VertexId> index_;
};

// BFS distances from one vertex; -1 marks unreachable.
std::vector<std::int32_t> bfs_distances(const ConfigGraph& g, VertexId source);

int bfs_distance(const ConfigGraph& g, const Word& w, const Word& v);

// Reference all-pairs diameter: one BFS per source, sequential.
int diameter_serial(const ConfigGraph& g);
// Same result; sources are distributed across OpenMP threads.
int diameter(const ConfigGraph& g);

// Pivoting Bron-Kerbosch. Each clique is returned sorted; the list is sorted.
// kTooLarge above max_vertices.
std::vector<std::vector<VertexId>> maximal_cliques(
    const ConfigGraph& g, std::uint64_t max_vertices = kDefaultMaxVertices);

struct PathReport {
  bool valid = true;
  bool visits_all = false;
  std::uint64_t repeats = 0;
  std::uint64_t steps = 0;
  std::uint64_t visited = 0;  // distinct words, including the start
  BigInt expected = 0;        // count_words(parikh(start))
  std::optional<std::uint64_t> failure_step;  // 1-based
  std::string failure_reason;

  // Valid, every vertex seen, no repeats.
  bool hamiltonian() const { return valid && visits_all && repeats == 0; }
};

// Replays swaps from w0. Hamiltonian bookkeeping keeps every visited word,
// so only pass expect_hamiltonian for graphs that fit in memory.
PathReport validate_path(const Word& w0, std::span<const Swap> swaps,
                         bool expect_hamiltonian);

// Streaming form of validate_path for callers that produce swaps lazily.
class PathValidator {
 public:
  PathValidator(Word start, bool track_visits);

  // Returns false once the path has become invalid.
  bool step(const Swap& s);
  // Records a malformed step that could not be parsed into a Swap.
  void fail(std::string reason);
  const Word& current() const noexcept { return current_; }
  PathReport finish() const;

 private:
  Word current_;
  bool track_visits_;
  PathReport report_;
  std::unordered_set<std::string> visited_;  // symbols packed one per char
};

struct Ball {
  Word center;
  int radius = 0;
  std::vector<Word> members;  // sorted
  std::set<std::pair<std::size_t, std::size_t>> edges;  // member indices, a < b

  std::optional<std::size_t> find(const Word& w) const;
};

// Induced subgraph on {u : D(center, u) <= r}.
Ball ball(const ConfigGraph& g, const Word& center, int radius);

// Position permutation: (w o pi)[k] = w[pi[k]], pi given 1-based.
Word permute_positions(const Word& w, std::span<const Position> pi);

// True iff w -> w o pi maps ball_u bijectively onto ball_v and preserves
// adjacency and non-adjacency.
bool check_isomorphism_map(const Ball& ball_u, const Ball& ball_v,
                           std::span<const Position> pi);

}  // namespace swapgraph::oracle
