#pragma once

#include <cstdint>
#include <vector>

#include "swapgraph/enumerator.hpp"
#include "swapgraph/word.hpp"

namespace swapgraph::sweep {

struct SweepResult {
  std::uint64_t starts = 0;
  std::uint64_t hamiltonian = 0;
  std::vector<Word> failures;  // sorted
  std::uint64_t max_ops_between_outputs = 0;

  bool all_passed() const { return hamiltonian == starts; }
};

// Enumerates from every start word and checks that each stream is a valid
// Hamiltonian path. Reference implementation, one start after another.
SweepResult hamiltonian_sweep_serial(const std::vector<Word>& starts,
                                     EnumerationStrategy strategy = EnumerationStrategy::kAuto);

// Same result; start words are distributed across OpenMP threads. Each
// thread owns its enumerator, so no state is shared.
SweepResult hamiltonian_sweep(const std::vector<Word>& starts,
                              EnumerationStrategy strategy = EnumerationStrategy::kAuto);

}  // namespace swapgraph::sweep
