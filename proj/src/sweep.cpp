#include "swapgraph/sweep.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "swapgraph/oracle.hpp"

namespace swapgraph::sweep {

namespace {

struct StartOutcome {
  bool hamiltonian = false;
  std::uint64_t max_ops = 0;
};

// Exact replay with every visited word kept verbatim. O(n) per step.
StartOutcome run_exact(const Word& start, EnumerationStrategy strategy) {
  Enumerator e(start, strategy);
  oracle::PathValidator validator(start, true);
  bool ok = true;
  while (auto s = e.next_swap()) {
    if (!validator.step(*s) || validator.current() != e.current_word()) {
      ok = false;
      break;
    }
  }
  return {ok && validator.finish().hamiltonian(), e.delay_stats().max_ops_between_outputs};
}

// Same verdict with O(1) work per step: visited words are tracked by a
// Zobrist hash. Equal words always hash alike, so a path whose hashes are
// all distinct visits distinct words; only a hash repeat is ambiguous, and
// that case is settled by the exact replay.
StartOutcome run_one(const Word& start, EnumerationStrategy strategy) {
  const std::size_t n = start.size();
  const auto sigma = static_cast<std::size_t>(start.alphabet_size());
  std::mt19937_64 rng(0x5eed5eedULL + n);
  std::vector<std::uint64_t> table(n * (sigma + 1));
  for (auto& z : table) z = rng();
  auto key = [&](Position i, Symbol x) { return table[(i - 1) * (sigma + 1) + x]; };

  std::vector<Symbol> w(start.symbols().begin(), start.symbols().end());
  std::uint64_t h = 0;
  for (Position i = 1; i <= n; ++i) h ^= key(i, w[i - 1]);

  const BigInt expected = count_words(parikh(start));
  std::unordered_set<std::uint64_t> seen;
  if (expected < 1'000'000) seen.reserve(static_cast<std::size_t>(expected));
  seen.insert(h);

  Enumerator e(start, strategy);
  while (auto s = e.next_swap()) {
    const Position i = s->i();
    const Position j = s->j();
    if (j > n || w[i - 1] == w[j - 1]) return {false, e.delay_stats().max_ops_between_outputs};
    const Symbol a = w[i - 1];
    const Symbol b = w[j - 1];
    h ^= key(i, a) ^ key(j, a) ^ key(i, b) ^ key(j, b);
    std::swap(w[i - 1], w[j - 1]);
    if (!seen.insert(h).second) return run_exact(start, strategy);
  }
  const bool ok = BigInt(seen.size()) == expected &&
                  std::equal(w.begin(), w.end(), e.current_word().symbols().begin());
  return {ok, e.delay_stats().max_ops_between_outputs};
}

}  // namespace

SweepResult hamiltonian_sweep_serial(const std::vector<Word>& starts,
                                     EnumerationStrategy strategy) {
  SweepResult result;
  result.starts = starts.size();
  for (const auto& w : starts) {
    const auto outcome = run_one(w, strategy);
    result.max_ops_between_outputs = std::max(result.max_ops_between_outputs, outcome.max_ops);
    if (outcome.hamiltonian) {
      ++result.hamiltonian;
    } else {
      result.failures.push_back(w);
    }
  }
  std::sort(result.failures.begin(), result.failures.end());
  return result;
}

SweepResult hamiltonian_sweep(const std::vector<Word>& starts, EnumerationStrategy strategy) {
  const auto n = static_cast<std::int64_t>(starts.size());
  std::vector<StartOutcome> outcomes(starts.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t k = 0; k < n; ++k) outcomes[k] = run_one(starts[k], strategy);

  SweepResult result;
  result.starts = starts.size();
  for (std::size_t k = 0; k < starts.size(); ++k) {
    result.max_ops_between_outputs =
        std::max(result.max_ops_between_outputs, outcomes[k].max_ops);
    if (outcomes[k].hamiltonian) {
      ++result.hamiltonian;
    } else {
      result.failures.push_back(starts[k]);
    }
  }
  std::sort(result.failures.begin(), result.failures.end());
  return result;
}

}  // namespace swapgraph::sweep
