#include "swapgraph/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace swapgraph::structure {

std::uint64_t diameter_formula(const ParikhVector& p) {
  return p.total() - p.max_count();
}

std::uint64_t clique_number(const ParikhVector& p) {
  if (p.present_symbols().size() < 2) return 1;
  return p.max_count() + 1;
}

BigInt cliques_per_vertex(const ParikhVector& p) {
  BigInt sum = 0;
  const int sigma = p.alphabet_size();
  for (Symbol j = 1; j <= sigma; ++j) {
    BigInt product = 1;
    for (Symbol i = 1; i <= sigma; ++i) {
      if (i != j) product *= p[i];
    }
    sum += product;
  }
  return sum;
}

BigInt cliques_per_vertex_derived(const ParikhVector& p) {
  if (p.present_symbols().size() < 2) return 1;
  BigInt sum = 0;
  const int sigma = p.alphabet_size();
  for (Symbol x = 1; x <= sigma; ++x) {
    for (Symbol y = 1; y <= sigma; ++y) {
      if (x == y) continue;
      if (p[y] >= 2) {
        sum += p[x];
      } else if (x < y && p[x] == 1 && p[y] == 1) {
        sum += 1;
      }
    }
  }
  return sum;
}

BigInt total_maximal_cliques_paper(const ParikhVector& p) {
  BigInt sum = 0;
  const int sigma = p.alphabet_size();
  for (Symbol i = 1; i <= sigma; ++i) {
    for (Symbol j = 1; j <= sigma; ++j) {
      if (i == j) continue;
      std::vector<std::uint64_t> rest;
      for (Symbol k = 1; k <= sigma; ++k) {
        if (k != i && k != j) rest.push_back(p[k]);
      }
      sum += count_words(ParikhVector(std::move(rest)));
    }
  }
  return sum;
}

WitnessPair witness_pair(const ParikhVector& p) {
  const int sigma = p.alphabet_size();
  std::vector<Symbol> relabel(static_cast<std::size_t>(sigma));
  std::iota(relabel.begin(), relabel.end(), 1);
  std::stable_sort(relabel.begin(), relabel.end(),
                   [&](Symbol a, Symbol b) { return p[a] > p[b]; });

  // Counts in relabeled order, padded with a trailing zero.
  std::vector<std::uint64_t> sorted;
  for (const Symbol x : relabel) sorted.push_back(p[x]);
  sorted.push_back(0);

  std::vector<Symbol> w;
  std::vector<Symbol> v;
  w.reserve(p.total());
  v.reserve(p.total());
  for (int k = sigma; k >= 1; --k) {
    const auto repeats = sorted[k - 1] - sorted[k];
    for (std::uint64_t rep = 0; rep < repeats; ++rep) {
      for (int r = 1; r <= k; ++r) w.push_back(relabel[r - 1]);
      for (int r = 2; r <= k; ++r) v.push_back(relabel[r - 1]);
      v.push_back(relabel[0]);
    }
  }
  return {Word(std::move(w), sigma), Word(std::move(v), sigma), std::move(relabel)};
}

std::vector<Position> canonical_ball_map(const Word& u, const Word& v) {
  if (u.size() != v.size() || parikh(u) != parikh(v)) {
    throw Error(Errc::kParikhMismatch, u.to_string() + " vs " + v.to_string());
  }
  const auto sigma = static_cast<std::size_t>(u.alphabet_size());
  std::vector<std::vector<Position>> occurrences(sigma + 1);
  for (Position k = 1; k <= u.size(); ++k) occurrences[u[k]].push_back(k);
  std::vector<std::size_t> used(sigma + 1, 0);
  std::vector<Position> pi(u.size());
  for (Position k = 1; k <= v.size(); ++k) {
    const Symbol x = v[k];
    pi[k - 1] = occurrences[x][used[x]++];
  }
  return pi;
}

std::vector<Position> sampled_ball_map(const Word& u, const Word& v, std::uint64_t seed) {
  auto pi = canonical_ball_map(u, v);
  std::mt19937_64 rng(seed);
  const auto sigma = static_cast<std::size_t>(v.alphabet_size());
  std::vector<std::vector<std::size_t>> slots(sigma + 1);
  for (Position k = 1; k <= v.size(); ++k) slots[v[k]].push_back(k - 1);
  for (const auto& idx : slots) {
    std::vector<Position> images;
    for (const auto k : idx) images.push_back(pi[k]);
    std::shuffle(images.begin(), images.end(), rng);
    for (std::size_t m = 0; m < idx.size(); ++m) pi[idx[m]] = images[m];
  }
  return pi;
}

std::string clique_comparison_line(const ParikhVector& p, const BigInt& formula,
                                   const BigInt& oracle) {
  return p.to_string() + " formula=" + formula.str() + " oracle=" + oracle.str() +
         " match=" + (formula == oracle ? "true" : "false");
}

}  // namespace swapgraph::structure
