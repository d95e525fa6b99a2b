#include "swapgraph/ordered_index_set.hpp"

#include <iterator>
#include <string>

namespace swapgraph {

void OrderedIndexSet::insert(Position pos) {
  if (!members_.insert(pos).second) {
    throw Error(Errc::kDuplicate, "position " + std::to_string(pos) + " already present");
  }
}

void OrderedIndexSet::remove(Position pos) {
  if (members_.erase(pos) == 0) {
    throw Error(Errc::kMissing, "position " + std::to_string(pos) + " not present");
  }
}

std::optional<Position> OrderedIndexSet::min() const {
  if (members_.empty()) return std::nullopt;
  return *members_.begin();
}

std::optional<Position> OrderedIndexSet::max() const {
  if (members_.empty()) return std::nullopt;
  return *members_.rbegin();
}

std::optional<Position> OrderedIndexSet::pred_below(Position i) const {
  auto it = members_.lower_bound(i);
  if (it == members_.begin()) return std::nullopt;
  return *std::prev(it);
}

std::optional<Position> OrderedIndexSet::succ_at_least(Position i) const {
  auto it = members_.lower_bound(i);
  if (it == members_.end()) return std::nullopt;
  return *it;
}

std::optional<Position> OrderedIndexSet::succ_above(Position i) const {
  auto it = members_.upper_bound(i);
  if (it == members_.end()) return std::nullopt;
  return *it;
}

OrderedIndexSet positions(const Word& w, Symbol x) {
  OrderedIndexSet out;
  for (Position k = 1; k <= w.size(); ++k) {
    if (w[k] == x) out.insert(k);
  }
  return out;
}

}  // namespace swapgraph
