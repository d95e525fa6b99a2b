#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swapgraph/ordered_index_set.hpp"
#include "swapgraph/word.hpp"

namespace swapgraph {

// Instrumentation counters. An "op" is one ordered-set call (insert, remove,
// min, max, pred, succ) or one frame push/pop.
struct DelayStats {
  std::uint64_t max_ops_between_outputs = 0;
  std::uint64_t total_ops = 0;
  std::uint64_t outputs = 0;
  std::uint64_t preprocessing_ops = 0;  // tree construction + initial frame
};

enum class EnumerationStrategy {
  kAuto,     // binary routine when exactly two symbols occur, general otherwise
  kBinary,   // requires at most two distinct symbols
  kGeneral,
};

namespace detail {
class Engine;
}

// Pull-based Hamiltonian path through G(parikh(start)) beginning at start.
// Each next_swap() applies the returned swap to the internal word; after
// count_words - 1 swaps every word has been visited exactly once and the
// stream ends with std::nullopt. Between consecutive outputs the work is
// O(sigma) ordered-set calls, each O(log n).
//
// Single-threaded; may be moved between threads between calls.
class Enumerator {
 public:
  // kEmptyWord for an empty start word.
  explicit Enumerator(Word start,
                      EnumerationStrategy strategy = EnumerationStrategy::kAuto);
  ~Enumerator();
  Enumerator(Enumerator&&) noexcept;
  Enumerator& operator=(Enumerator&&) noexcept;

  std::optional<Swap> next_swap();

  const Word& start_word() const noexcept;
  const Word& current_word() const noexcept;
  // Positions of x in the current word.
  const OrderedIndexSet& positions_of(Symbol x) const;
  DelayStats delay_stats() const noexcept;
  bool uses_binary_routine() const noexcept;
  std::size_t frame_depth() const noexcept;

 private:
  std::unique_ptr<detail::Engine> engine_;
};

struct EnumerationSummary {
  std::uint64_t swaps = 0;
  DelayStats stats;
  Word final_word;
};

// Drives an Enumerator to exhaustion, handing every swap to sink in order.
// Exceptions thrown by sink propagate.
EnumerationSummary enumerate_all(const Word& start, const std::function<void(const Swap&)>& sink,
                                 EnumerationStrategy strategy = EnumerationStrategy::kAuto);

// Runs at most max_steps swaps (0 = to exhaustion) and returns the counters.
DelayStats measure_delay(const Word& start, std::uint64_t max_steps,
                         EnumerationStrategy strategy = EnumerationStrategy::kAuto);

// Resumable position in a stream: the start word, the number of swaps
// already emitted and the word they lead to.
struct Checkpoint {
  Word start;
  std::uint64_t emitted = 0;
  Word current;

  std::string serialize() const;
  static Checkpoint parse(std::string_view text);
};

// Re-creates the enumerator for cp.start and fast-forwards cp.emitted swaps.
// kParse when the replay does not reach cp.current.
Enumerator resume(const Checkpoint& cp, EnumerationStrategy strategy = EnumerationStrategy::kAuto);

}  // namespace swapgraph
