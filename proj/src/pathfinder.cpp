#include "swapgraph/pathfinder.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

namespace swapgraph::pathfinder {

namespace {

void require_same_parikh(const Word& w, const Word& v) {
  if (w.size() != v.size()) {
    throw Error(Errc::kLengthMismatch, w.to_string() + " vs " + v.to_string());
  }
  if (parikh(w) != parikh(v)) {
    throw Error(Errc::kParikhMismatch, w.to_string() + " vs " + v.to_string());
  }
}

std::string key_of(const Word& w) {
  return std::string(w.symbols().begin(), w.symbols().end());
}

}  // namespace

std::vector<Swap> greedy_path(const Word& w, const Word& v) {
  require_same_parikh(w, v);
  const ParikhVector p = parikh(w);
  Symbol anchor = 1;
  for (Symbol x = 1; x <= p.alphabet_size(); ++x) {
    if (p[x] > p[anchor]) anchor = x;
  }

  std::vector<Swap> path;
  Word current = w;
  for (Symbol x = 1; x <= p.alphabet_size(); ++x) {
    if (x == anchor || p[x] == 0) continue;
    // Occurrence indices are taken against the word as it stands after the
    // previous symbol's batch. Positions where x already sits in both words
    // pair with themselves and are dropped.
    std::vector<Position> from;
    std::vector<Position> to;
    for (Position k = 1; k <= current.size(); ++k) {
      const bool in_current = current[k] == x;
      const bool in_target = v[k] == x;
      if (in_current && !in_target) from.push_back(k);
      if (in_target && !in_current) to.push_back(k);
    }
    for (std::size_t k = 0; k < from.size(); ++k) {
      const Swap s(from[k], to[k]);
      current = apply_swap(current, s);
      path.push_back(s);
    }
  }
  return path;
}

SwapGraph::SwapGraph(const Word& w, const Word& v) : w_(w), v_(v), out_(w.size()) {
  require_same_parikh(w, v);
  for (Position i = 1; i <= w.size(); ++i) {
    for (Position j = 1; j <= v.size(); ++j) {
      if (w[i] == v[j]) out_[i - 1].push_back(j);
    }
  }
}

bool SwapGraph::has_edge(Position i, Position j) const {
  if (i < 1 || i > size() || j < 1 || j > size()) return false;
  return w_[i] == v_[j];
}

std::size_t SwapGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& succ : out_) total += succ.size();
  return total;
}

void SwapGraph::write_edge_list(std::ostream& os) const {
  for (Position i = 1; i <= size(); ++i) {
    for (const Position j : out_[i - 1]) os << i << ' ' << j << ' ' << w_[i] << '\n';
  }
}

void check_cover(const SwapGraph& g, const CycleCover& cover) {
  std::vector<bool> seen(g.size() + 1, false);
  std::size_t covered = 0;
  for (const auto& cycle : cover) {
    if (cycle.empty()) throw Error(Errc::kInvalidCover, "empty cycle");
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Position a = cycle[k];
      const Position b = cycle[(k + 1) % cycle.size()];
      if (a < 1 || a > g.size()) {
        throw Error(Errc::kInvalidCover, "position " + std::to_string(a) + " out of range");
      }
      if (seen[a]) throw Error(Errc::kInvalidCover, "position " + std::to_string(a) + " repeated");
      seen[a] = true;
      ++covered;
      if (!g.has_edge(a, b)) {
        throw Error(Errc::kInvalidCover,
                    "no edge " + std::to_string(a) + " -> " + std::to_string(b));
      }
    }
  }
  if (covered != g.size()) throw Error(Errc::kInvalidCover, "cover misses positions");
}

std::vector<Swap> cycle_cover_to_swaps(const SwapGraph& g, const CycleCover& cover) {
  check_cover(g, cover);
  std::vector<Swap> out;
  for (const auto& cycle : cover) {
    for (std::size_t k = 1; k < cycle.size(); ++k) out.emplace_back(cycle.front(), cycle[k]);
  }
  return out;
}

Word replay_transpositions(Word w, const std::vector<Swap>& swaps) {
  for (const auto& s : swaps) {
    if (s.j() > w.size()) throw Error(Errc::kOutOfRange, "transposition " + s.to_string());
    w.transpose(s.i(), s.j());
  }
  return w;
}

namespace {

void collect_covers(const SwapGraph& g, Position i, std::vector<Position>& image,
                    std::vector<bool>& used, std::vector<CycleCover>& out) {
  if (i > g.size()) {
    CycleCover cover;
    std::vector<bool> done(g.size() + 1, false);
    for (Position start = 1; start <= g.size(); ++start) {
      if (done[start]) continue;
      Cycle cycle;
      for (Position k = start; !done[k]; k = image[k]) {
        done[k] = true;
        cycle.push_back(k);
      }
      cover.push_back(std::move(cycle));
    }
    out.push_back(std::move(cover));
    return;
  }
  for (const Position j : g.successors(i)) {
    if (used[j]) continue;
    used[j] = true;
    image[i] = j;
    collect_covers(g, i + 1, image, used, out);
    used[j] = false;
  }
}

}  // namespace

std::vector<CycleCover> all_cycle_covers(const SwapGraph& g) {
  std::vector<CycleCover> out;
  std::vector<Position> image(g.size() + 1, 0);
  std::vector<bool> used(g.size() + 1, false);
  collect_covers(g, 1, image, used, out);
  return out;
}

int exact_distance(const Word& w, const Word& v, std::uint64_t max_vertices) {
  require_same_parikh(w, v);
  const BigInt count = count_words(parikh(w));
  if (count > max_vertices) {
    throw Error(Errc::kTooLarge, "G" + parikh(w).to_string() + " has " + count.str() +
                                     " vertices (cap " + std::to_string(max_vertices) + ")");
  }
  if (w == v) return 0;
  const std::string goal = key_of(v);
  std::unordered_map<std::string, int> dist;
  std::vector<std::string> queue{key_of(w)};
  dist.emplace(queue.front(), 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::string cur = queue[head];
    const int d = dist.at(cur);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[i] == cur[j]) continue;
        std::swap(cur[i], cur[j]);
        if (cur == goal) return d + 1;
        if (dist.emplace(cur, d + 1).second) queue.push_back(cur);
        std::swap(cur[i], cur[j]);
      }
    }
  }
  throw Error(Errc::kUnknownVertex, v.to_string() + " unreachable");
}

double ProbeReport::match_rate() const {
  if (records.empty()) return 1.0;
  return static_cast<double>(matches) / static_cast<double>(records.size());
}

std::string ProbeReport::summary() const {
  std::ostringstream os;
  os << "summary P=" << parikh.to_string() << " mode=" << (exhaustive ? "exhaustive" : "sampled")
     << " pairs=" << records.size() << " matches=" << matches
     << " counterexamples=" << (records.size() - matches) << " greedy_shorter=" << greedy_shorter
     << " match_rate=" << match_rate();
  return os.str();
}

void ProbeReport::write(std::ostream& os, bool counterexamples_only) const {
  for (const auto& r : records) {
    if (counterexamples_only && r.match()) continue;
    os << r.w.to_string() << ' ' << r.v.to_string() << ' ' << r.greedy_len << ' ' << r.exact_len
       << ' ' << (r.match() ? "true" : "false") << '\n';
  }
  os << summary() << '\n';
}

ProbeReport probe_conjecture(const ParikhVector& p, std::uint64_t samples, std::uint64_t seed,
                             std::uint64_t exhaustive_pairs, std::uint64_t max_vertices) {
  const auto g = oracle::ConfigGraph::build(p, max_vertices);
  const auto n = static_cast<std::uint64_t>(g.size());
  ProbeReport report;
  report.parikh = p;
  report.exhaustive = n * n <= exhaustive_pairs;

  auto record = [&](oracle::VertexId a, oracle::VertexId b, int exact) {
    ProbeRecord r{g.word(a), g.word(b), greedy_path(g.word(a), g.word(b)).size(), exact};
    if (r.match()) ++report.matches;
    if (static_cast<int>(r.greedy_len) < r.exact_len) ++report.greedy_shorter;
    report.records.push_back(std::move(r));
  };

  if (report.exhaustive) {
    for (oracle::VertexId a = 0; a < n; ++a) {
      const auto dist = oracle::bfs_distances(g, a);
      for (oracle::VertexId b = 0; b < n; ++b) record(a, b, dist[b]);
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<oracle::VertexId> pick(0, static_cast<oracle::VertexId>(n - 1));
  std::vector<std::pair<oracle::VertexId, oracle::VertexId>> pairs(samples);
  for (auto& pr : pairs) pr = {pick(rng), pick(rng)};
  // Group by source so each BFS is reused.
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::int32_t> dist;
  std::optional<oracle::VertexId> source;
  for (const auto& [a, b] : pairs) {
    if (source != a) {
      dist = oracle::bfs_distances(g, a);
      source = a;
    }
    record(a, b, dist[b]);
  }
  return report;
}

}  // namespace swapgraph::pathfinder
