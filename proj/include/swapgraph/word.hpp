#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "swapgraph/error.hpp"

namespace swapgraph {

// Symbols are the integers 1..sigma; positions are 1-based throughout the
// public interface.
using Symbol = std::int32_t;
using Position = std::size_t;
using BigInt = boost::multiprecision::cpp_int;

class Word {
 public:
  Word() = default;
  // Throws kInvalidSymbol when a symbol falls outside [1, alphabet_size].
  Word(std::vector<Symbol> symbols, int alphabet_size);

  // Accepts a digit string ("11221122") or comma-separated integers
  // ("1,2,10"). alphabet_size == 0 infers sigma as the largest symbol.
  static Word parse(std::string_view text, int alphabet_size = 0);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  int alphabet_size() const noexcept { return sigma_; }

  // 1-based, unchecked.
  Symbol operator[](Position i) const { return symbols_[i - 1]; }
  Symbol at(Position i) const;

  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  // Exchanges two positions without the distinct-symbol check. Used by the
  // enumerator and replay helpers that have already validated the step.
  void transpose(Position i, Position j) noexcept {
    std::swap(symbols_[i - 1], symbols_[j - 1]);
  }

  // Digit string when sigma <= 9, comma-separated integers otherwise.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  int sigma_ = 0;
};

class ParikhVector {
 public:
  ParikhVector() = default;
  explicit ParikhVector(std::vector<std::uint64_t> counts)
      : counts_(std::move(counts)) {}

  // "(3,2)" or "3,2". Negative or non-numeric entries raise kInvalidParikh.
  static ParikhVector parse(std::string_view text);

  int alphabet_size() const noexcept { return static_cast<int>(counts_.size()); }
  std::uint64_t operator[](Symbol x) const { return counts_[x - 1]; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }

  std::uint64_t total() const noexcept;
  std::uint64_t max_count() const noexcept;
  // Symbols with a nonzero count, in increasing order.
  std::vector<Symbol> present_symbols() const;

  std::string to_string() const;

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

// Index pair (i, j) with 1 <= i < j. Construction normalizes the order.
class Swap {
 public:
  Swap(Position a, Position b);

  Position i() const noexcept { return i_; }
  Position j() const noexcept { return j_; }

  // "i j"
  std::string to_string() const;
  static Swap parse(std::string_view text);

  friend bool operator==(const Swap&, const Swap&) = default;

 private:
  Position i_;
  Position j_;
};

ParikhVector parikh(const Word& w);

// Definition-level 2-swap: the symbols at i and j must differ.
Word apply_swap(const Word& w, const Swap& s);

// n! / prod P[i]!, exact.
BigInt count_words(const ParikhVector& p);

// Lexicographically smallest word with the given Parikh vector.
Word first_word(const ParikhVector& p);

// Every word with Parikh vector p in lexicographic order.
std::vector<Word> all_words(const ParikhVector& p);

// Uniformly shuffled word of length n whose counts differ by at most one
// across the sigma symbols. Deterministic in seed.
Word balanced_random_word(std::size_t n, int sigma, std::uint64_t seed);

}  // namespace swapgraph
