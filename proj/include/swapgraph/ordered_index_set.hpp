#pragma once

#include <cstddef>
#include <optional>
#include <set>

#include "swapgraph/word.hpp"

namespace swapgraph {

// Dynamic ordered set of positions with logarithmic min/max and
// predecessor/successor queries. Queries return std::nullopt when no member
// qualifies.
class OrderedIndexSet {
 public:
  OrderedIndexSet() = default;

  // kDuplicate if pos is already a member.
  void insert(Position pos);
  // kMissing if pos is not a member.
  void remove(Position pos);

  bool contains(Position pos) const { return members_.contains(pos); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  std::optional<Position> min() const;
  std::optional<Position> max() const;
  // Largest member < i.
  std::optional<Position> pred_below(Position i) const;
  // Smallest member >= i.
  std::optional<Position> succ_at_least(Position i) const;
  // Smallest member > i.
  std::optional<Position> succ_above(Position i) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const OrderedIndexSet&, const OrderedIndexSet&) = default;

 private:
  std::set<Position> members_;
};

// Positions of symbol x in w.
OrderedIndexSet positions(const Word& w, Symbol x);

}  // namespace swapgraph
