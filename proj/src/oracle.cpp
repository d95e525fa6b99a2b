#include "swapgraph/oracle.hpp"

#include <algorithm>

namespace swapgraph::oracle {

ConfigGraph ConfigGraph::build(const ParikhVector& p, std::uint64_t max_vertices) {
  const BigInt count = count_words(p);
  if (count > max_vertices) {
    throw Error(Errc::kTooLarge, "G" + p.to_string() + " has " + count.str() +
                                     " vertices (cap " + std::to_string(max_vertices) + ")");
  }
  ConfigGraph g;
  g.parikh_ = p;
  g.vertices_ = all_words(p);
  for (VertexId v = 0; v < g.vertices_.size(); ++v) g.index_.emplace(g.vertices_[v], v);

  g.adjacency_.resize(g.vertices_.size());
  for (VertexId v = 0; v < g.vertices_.size(); ++v) {
    Word w = g.vertices_[v];
    auto& adj = g.adjacency_[v];
    for (Position i = 1; i <= w.size(); ++i) {
      for (Position j = i + 1; j <= w.size(); ++j) {
        if (w[i] == w[j]) continue;
        w.transpose(i, j);
        adj.push_back(g.index_.at(w));
        w.transpose(i, j);
      }
    }
    std::sort(adj.begin(), adj.end());
  }
  return g;
}

bool ConfigGraph::adjacent(VertexId a, VertexId b) const {
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::optional<VertexId> ConfigGraph::find(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId ConfigGraph::id(const Word& w) const {
  if (auto v = find(w)) return *v;
  throw Error(Errc::kUnknownVertex, w.to_string() + " is not a vertex of G" + parikh_.to_string());
}

std::size_t ConfigGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& adj : adjacency_) twice += adj.size();
  return twice / 2;
}

void ConfigGraph::write_adjacency(std::ostream& os) const {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    os << v << ": " << vertices_[v].to_string() << ":";
    for (const auto u : adjacency_[v]) os << ' ' << u;
    os << '\n';
  }
}

void ConfigGraph::write_edge_list(std::ostream& os) const {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    for (const auto u : adjacency_[v]) {
      if (v < u) os << v << ' ' << u << '\n';
    }
  }
}

std::vector<std::int32_t> bfs_distances(const ConfigGraph& g, VertexId source) {
  std::vector<std::int32_t> dist(g.size(), -1);
  std::vector<VertexId> queue;
  queue.reserve(g.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (const VertexId u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

int bfs_distance(const ConfigGraph& g, const Word& w, const Word& v) {
  const VertexId source = g.id(w);
  const VertexId target = g.id(v);
  return bfs_distances(g, source)[target];
}

namespace {

int eccentricity(const ConfigGraph& g, VertexId source) {
  const auto dist = bfs_distances(g, source);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace

int diameter_serial(const ConfigGraph& g) {
  int best = 0;
  for (VertexId v = 0; v < g.size(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

int diameter(const ConfigGraph& g) {
  int best = 0;
  const auto n = static_cast<std::int64_t>(g.size());
#pragma omp parallel for reduction(max : best) schedule(dynamic, 16)
  for (std::int64_t v = 0; v < n; ++v) {
    best = std::max(best, eccentricity(g, static_cast<VertexId>(v)));
  }
  return best;
}

namespace {

class BronKerbosch {
 public:
  explicit BronKerbosch(const ConfigGraph& g) : g_(g) {}

  std::vector<std::vector<VertexId>> run() {
    std::vector<VertexId> p(g_.size());
    for (VertexId v = 0; v < g_.size(); ++v) p[v] = v;
    std::vector<VertexId> r;
    expand(r, std::move(p), {});
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  std::vector<VertexId> intersect(const std::vector<VertexId>& set, VertexId v) const {
    std::vector<VertexId> out;
    const auto adj = g_.neighbors(v);
    std::set_intersection(set.begin(), set.end(), adj.begin(), adj.end(),
                          std::back_inserter(out));
    return out;
  }

  // p and x are kept sorted.
  void expand(std::vector<VertexId>& r, std::vector<VertexId> p, std::vector<VertexId> x) {
    if (p.empty()) {
      if (x.empty()) {
        auto clique = r;
        std::sort(clique.begin(), clique.end());
        out_.push_back(std::move(clique));
      }
      return;
    }
    // Tomita pivot: the vertex of P u X with most neighbours in P.
    VertexId pivot = p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
      for (const VertexId u : *set) {
        const auto hits = intersect(p, u).size();
        if (hits >= best) {
          best = hits;
          pivot = u;
        }
      }
    }
    std::vector<VertexId> candidates;
    const auto pivot_adj = g_.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), pivot_adj.begin(), pivot_adj.end(),
                        std::back_inserter(candidates));
    for (const VertexId v : candidates) {
      r.push_back(v);
      expand(r, intersect(p, v), intersect(x, v));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const ConfigGraph& g_;
  std::vector<std::vector<VertexId>> out_;
};

}  // namespace

std::vector<std::vector<VertexId>> maximal_cliques(const ConfigGraph& g,
                                                   std::uint64_t max_vertices) {
  if (g.size() > max_vertices) {
    throw Error(Errc::kTooLarge, "clique enumeration capped at " + std::to_string(max_vertices));
  }
  return BronKerbosch(g).run();
}

PathValidator::PathValidator(Word start, bool track_visits)
    : current_(std::move(start)), track_visits_(track_visits) {
  report_.expected = count_words(parikh(current_));
  report_.visited = 1;
  if (track_visits_) {
    visited_.emplace(current_.symbols().begin(), current_.symbols().end());
  }
}

void PathValidator::fail(std::string reason) {
  if (!report_.valid) return;
  ++report_.steps;
  report_.valid = false;
  report_.failure_step = report_.steps;
  report_.failure_reason = std::move(reason);
}

bool PathValidator::step(const Swap& s) {
  if (!report_.valid) return false;
  ++report_.steps;
  try {
    current_ = apply_swap(current_, s);
  } catch (const Error& e) {
    report_.valid = false;
    report_.failure_step = report_.steps;
    report_.failure_reason = e.what();
    return false;
  }
  if (track_visits_) {
    if (visited_.emplace(current_.symbols().begin(), current_.symbols().end()).second) {
      ++report_.visited;
    } else {
      ++report_.repeats;
    }
  }
  return true;
}

PathReport PathValidator::finish() const {
  PathReport out = report_;
  out.visits_all = track_visits_ && out.valid && out.repeats == 0 &&
                   BigInt(out.visited) == out.expected;
  return out;
}

PathReport validate_path(const Word& w0, std::span<const Swap> swaps, bool expect_hamiltonian) {
  PathValidator validator(w0, expect_hamiltonian);
  for (const auto& s : swaps) {
    if (!validator.step(s)) break;
  }
  return validator.finish();
}

std::optional<std::size_t> Ball::find(const Word& w) const {
  auto it = std::lower_bound(members.begin(), members.end(), w);
  if (it == members.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

Ball ball(const ConfigGraph& g, const Word& center, int radius) {
  const auto dist = bfs_distances(g, g.id(center));
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (dist[v] >= 0 && dist[v] <= radius) ids.push_back(v);
  }
  // Ids are in lexicographic order, so members come out sorted.
  Ball out{center, radius, {}, {}};
  out.members.reserve(ids.size());
  for (const auto v : ids) out.members.push_back(g.word(v));
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      if (g.adjacent(ids[a], ids[b])) out.edges.emplace(a, b);
    }
  }
  return out;
}

Word permute_positions(const Word& w, std::span<const Position> pi) {
  if (pi.size() != w.size()) throw Error(Errc::kLengthMismatch, "permutation length");
  std::vector<Symbol> out(w.size());
  for (std::size_t k = 0; k < pi.size(); ++k) out[k] = w.at(pi[k]);
  return Word(std::move(out), w.alphabet_size());
}

bool check_isomorphism_map(const Ball& ball_u, const Ball& ball_v,
                           std::span<const Position> pi) {
  if (ball_u.members.size() != ball_v.members.size()) return false;
  if (ball_u.edges.size() != ball_v.edges.size()) return false;
  std::vector<std::size_t> image(ball_u.members.size());
  std::vector<bool> hit(ball_v.members.size(), false);
  for (std::size_t a = 0; a < ball_u.members.size(); ++a) {
    const auto target = ball_v.find(permute_positions(ball_u.members[a], pi));
    if (!target || hit[*target]) return false;
    hit[*target] = true;
    image[a] = *target;
  }
  // Bijective and edge counts agree, so mapping every edge onto an edge
  // also rules out extra edges in the image.
  for (const auto& [a, b] : ball_u.edges) {
    const auto x = std::min(image[a], image[b]);
    const auto y = std::max(image[a], image[b]);
    if (!ball_v.edges.contains({x, y})) return false;
  }
  return true;
}

}  // namespace swapgraph::oracle
