#include "swapgraph/enumerator.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace swapgraph {
namespace detail {

inline constexpr std::size_t kNoFrame = std::numeric_limits<std::size_t>::max();

// Shared state: the current word, one ordered set per symbol, and the
// instrumentation counters. Every tree call made by an engine goes through
// the counted helpers below.
class Engine {
 public:
  explicit Engine(Word start) : start_(std::move(start)), word_(start_) {
    if (word_.empty()) throw Error(Errc::kEmptyWord, "enumeration needs a non-empty word");
    trees_.resize(static_cast<std::size_t>(word_.alphabet_size()) + 1);
    for (Position k = 1; k <= word_.size(); ++k) {
      trees_[word_[k]].insert(k);
      ++ops_;
    }
    present_ = parikh(word_).present_symbols();
  }
  virtual ~Engine() = default;

  std::optional<Swap> next() {
    if (exhausted_) return std::nullopt;
    auto s = step();
    if (!s) {
      exhausted_ = true;
      close_interval();
    }
    return s;
  }

  const Word& start() const noexcept { return start_; }
  const Word& word() const noexcept { return word_; }
  const OrderedIndexSet& tree(Symbol x) const {
    if (x < 1 || x > word_.alphabet_size()) {
      throw Error(Errc::kInvalidSymbol, "symbol " + std::to_string(x));
    }
    return trees_[x];
  }
  DelayStats stats() const noexcept {
    DelayStats out = stats_;
    out.total_ops = ops_;
    return out;
  }
  virtual bool binary() const noexcept = 0;
  virtual std::size_t depth() const noexcept = 0;

 protected:
  virtual std::optional<Swap> step() = 0;

  // Call once the root frame is in place.
  void finish_preprocessing() {
    stats_.preprocessing_ops = ops_;
    interval_start_ = ops_;
  }

  std::optional<Position> tree_max(Symbol x) {
    ++ops_;
    return trees_[x].max();
  }
  std::optional<Position> tree_pred_below(Symbol x, Position i) {
    ++ops_;
    return trees_[x].pred_below(i);
  }
  std::optional<Position> tree_succ_above(Symbol x, Position i) {
    ++ops_;
    return trees_[x].succ_above(i);
  }
  void count_frame_op(std::uint64_t k = 1) { ops_ += k; }

  // Applies (i, j), keeps the trees in sync and records the output.
  Swap emit(Position i, Position j) {
    const Symbol at_i = word_[i];
    const Symbol at_j = word_[j];
    trees_[at_i].remove(i);
    trees_[at_i].insert(j);
    trees_[at_j].remove(j);
    trees_[at_j].insert(i);
    ops_ += 4;
    word_.transpose(i, j);
    ++stats_.outputs;
    close_interval();
    return Swap(i, j);
  }

  Word start_;
  Word word_;
  std::vector<OrderedIndexSet> trees_;  // trees_[x] = positions of x; [0] unused
  std::vector<Symbol> present_;

 private:
  void close_interval() {
    stats_.max_ops_between_outputs =
        std::max(stats_.max_ops_between_outputs, ops_ - interval_start_);
    interval_start_ = ops_;
  }

  std::uint64_t ops_ = 0;
  std::uint64_t interval_start_ = 0;
  DelayStats stats_;
  bool exhausted_ = false;
};

// Two-symbol routine. A frame owns the suffix window whose Parikh vector is
// (count_a, count_b); the window starts at n - (count_a + count_b) + 1.
// Frames whose last iteration has been reached are replaced by their final
// child instead of waiting for it, so the frame below the top always has
// output left to produce.
class BinaryEngine final : public Engine {
 public:
  explicit BinaryEngine(Word start) : Engine(std::move(start)) {
    if (present_.size() > 2) {
      throw Error(Errc::kInvalidParikh, "binary routine needs at most two distinct symbols");
    }
    if (present_.size() == 2) {
      a_ = present_[0];
      b_ = present_[1];
      const auto p = parikh(word_);
      push({Phase::kEnter, p[a_], p[b_], 0, 0, 0, kNoFrame});
    }
    finish_preprocessing();
  }

  bool binary() const noexcept override { return true; }
  std::size_t depth() const noexcept override { return frames_.size(); }

 private:
  enum class Phase { kEnter, kLoop, kDone };

  struct Frame {
    Phase phase;
    std::uint64_t count_a;  // Parikh vector of the window
    std::uint64_t count_b;
    Position i;             // next loop position
    std::uint64_t tail_a;   // Parikh vector of [i + 1, n]
    std::uint64_t tail_b;
    std::size_t ret;        // resume token
  };

  void push(Frame f) {
    frames_.push_back(f);
    count_frame_op();
  }

  void return_to(std::size_t ret) {
    const std::size_t keep = ret == kNoFrame ? 0 : ret + 1;
    count_frame_op(frames_.size() - keep);
    frames_.resize(keep);
  }

  void add(Symbol x, std::uint64_t& a, std::uint64_t& b, std::uint64_t k) const {
    (x == a_ ? a : b) += k;
  }

  std::optional<Swap> step() override {
    const Position n = word_.size();
    while (!frames_.empty()) {
      const std::size_t self = frames_.size() - 1;
      Frame& f = frames_.back();
      switch (f.phase) {
        case Phase::kEnter: {
          if (f.count_a == 0 || f.count_b == 0) {
            return_to(f.ret);
            break;
          }
          if (f.count_a == 1 && f.count_b == 1) {
            f.phase = Phase::kDone;
            return emit(n - 1, n);
          }
          const Position ra = *tree_max(a_);
          const Position rb = *tree_max(b_);
          f.i = std::min(ra, rb);
          // Everything right of min(ra, rb) is the symbol with the later
          // last occurrence.
          f.tail_a = f.tail_b = 0;
          add(ra > rb ? a_ : b_, f.tail_a, f.tail_b, n - f.i);
          f.phase = Phase::kLoop;
          break;
        }
        case Phase::kLoop: {
          const Position lo = n - (f.count_a + f.count_b) + 1;
          const Position i = f.i;
          const Symbol here = word_[i];
          const Symbol other = here == a_ ? b_ : a_;
          // Smallest position right of i holding the other symbol.
          const Position j = *tree_succ_above(other, i);
          const Swap s = emit(i, j);
          if (i > lo) {
            // The swap trades one `other` in [i + 1, n] for `here`.
            Frame child{Phase::kEnter, f.tail_a, f.tail_b, 0, 0, 0, self};
            add(here, child.count_a, child.count_b, 1);
            (other == a_ ? child.count_a : child.count_b) -= 1;
            add(here, f.tail_a, f.tail_b, 1);
            --f.i;
            push(child);
          } else {
            std::uint64_t ca = f.count_a;
            std::uint64_t cb = f.count_b;
            (other == a_ ? ca : cb) -= 1;
            f = Frame{Phase::kEnter, ca, cb, 0, 0, 0, f.ret};
            count_frame_op();
          }
          return s;
        }
        case Phase::kDone:
          return_to(f.ret);
          break;
      }
    }
    return std::nullopt;
  }

  Symbol a_ = 0;
  Symbol b_ = 0;
  std::vector<Frame> frames_;
};

// General alphabets. Let s_0 < ... < s_{m-1} be the symbols that occur. A
// level-L frame permutes the symbols >= s_L among the positions they occupy
// (call that position set S_L; it does not change while the frame is
// active). It walks the two-class pattern "s_L" vs "greater than s_L" over
// S_L with the binary suffix recursion, and after every pattern change runs
// a complete level-(L+1) enumeration before moving on.
//
// A window is S_L intersected with [lo, n]. Two readings fix the printed
// pseudocode: positions are stepped through S_L by taking the predecessor
// over the per-symbol trees of level L, and a child window is only created
// when both classes occur in it, so that every frame left on the stack
// below the top still has output to produce.
class GeneralEngine final : public Engine {
 public:
  explicit GeneralEngine(Word start) : Engine(std::move(start)) {
    if (present_.size() >= 2) push({Phase::kEnter, 0, 1, 0, 0, false, kNoFrame});
    finish_preprocessing();
  }

  bool binary() const noexcept override { return false; }
  std::size_t depth() const noexcept override { return frames_.size(); }

 private:
  enum class Phase {
    kEnter,      // run the nested level, then start the pattern walk
    kStart,      // locate the first pattern swap of the window
    kSwap,       // emit the swap at position i
    kAfterSwap,  // nested level done; open the child window, step to prev
    kTail,       // nested level done on the last iteration; become the child
    kDone,       // nothing left; return on the next call
  };

  struct Frame {
    Phase phase;
    std::size_t level;
    Position lo;
    Position i;
    Position prev;     // predecessor of i in S_level, for the next iteration
    bool child_live;   // child window [i + 1, n] holds both classes
    std::size_t ret;   // resume token
  };

  std::size_t last_level() const noexcept { return present_.size() - 2; }
  bool has_nested(std::size_t level) const noexcept { return level < last_level(); }
  Symbol symbol(std::size_t level) const noexcept { return present_[level]; }

  void push(Frame f) {
    frames_.push_back(f);
    count_frame_op();
  }

  void return_to(std::size_t ret) {
    const std::size_t keep = ret == kNoFrame ? 0 : ret + 1;
    count_frame_op(frames_.size() - keep);
    frames_.resize(keep);
  }

  // Rightmost position holding a symbol above the level's symbol.
  Position max_greater(std::size_t level) {
    Position best = 0;
    for (std::size_t k = level + 1; k < present_.size(); ++k) {
      if (auto r = tree_max(present_[k])) best = std::max(best, *r);
    }
    return best;
  }

  bool window_live(std::size_t level, Position lo) {
    const auto rq = tree_max(symbol(level));
    return rq && *rq >= lo && max_greater(level) >= lo;
  }

  // Largest position of S_level below i.
  std::optional<Position> pred_in_level(std::size_t level, Position i) {
    std::optional<Position> best;
    for (std::size_t k = level; k < present_.size(); ++k) {
      if (auto p = tree_pred_below(present_[k], i)) best = std::max(best.value_or(0), *p);
    }
    return best;
  }

  // Smallest position right of i holding the opposite class.
  Position partner(std::size_t level, Position i) {
    const Symbol q = symbol(level);
    if (word_[i] != q) return *tree_succ_above(q, i);
    std::optional<Position> best;
    for (std::size_t k = level + 1; k < present_.size(); ++k) {
      if (auto s = tree_succ_above(present_[k], i)) {
        best = best ? std::min(*best, *s) : *s;
      }
    }
    return *best;
  }

  Frame level_entry(std::size_t level, std::size_t ret) const {
    return {Phase::kEnter, level, 1, 0, 0, false, ret};
  }

  std::optional<Swap> step() override {
    while (!frames_.empty()) {
      const std::size_t self = frames_.size() - 1;
      Frame& f = frames_.back();
      switch (f.phase) {
        case Phase::kEnter: {
          f.phase = Phase::kStart;
          if (has_nested(f.level)) push(level_entry(f.level + 1, self));
          break;
        }
        case Phase::kStart: {
          const Position rq = *tree_max(symbol(f.level));
          f.i = std::min(rq, max_greater(f.level));
          f.phase = Phase::kSwap;
          break;
        }
        case Phase::kSwap: {
          const std::size_t level = f.level;
          const Position i = f.i;
          const Swap s = emit(i, partner(level, i));
          const auto prev = pred_in_level(level, i);
          const bool last = !prev || *prev < f.lo;
          const bool child_live = window_live(level, i + 1);
          if (!last) {
            f.prev = *prev;
            f.child_live = child_live;
            f.phase = Phase::kAfterSwap;
            if (has_nested(level)) push(level_entry(level + 1, self));
          } else if (child_live) {
            f.phase = Phase::kTail;
            if (has_nested(level)) push(level_entry(level + 1, self));
          } else if (has_nested(level)) {
            f = level_entry(level + 1, f.ret);
            count_frame_op();
          } else {
            f.phase = Phase::kDone;
          }
          return s;
        }
        case Phase::kAfterSwap: {
          const Position child_lo = f.i + 1;
          const bool child_live = f.child_live;
          f.i = f.prev;
          f.phase = Phase::kSwap;
          if (child_live) push({Phase::kStart, f.level, child_lo, 0, 0, false, self});
          break;
        }
        case Phase::kTail: {
          f = Frame{Phase::kStart, f.level, f.i + 1, 0, 0, false, f.ret};
          count_frame_op();
          break;
        }
        case Phase::kDone:
          return_to(f.ret);
          break;
      }
    }
    return std::nullopt;
  }

  std::vector<Frame> frames_;
};

}  // namespace detail

namespace {

std::unique_ptr<detail::Engine> make_engine(Word start, EnumerationStrategy strategy) {
  if (start.empty()) throw Error(Errc::kEmptyWord, "enumeration needs a non-empty word");
  switch (strategy) {
    case EnumerationStrategy::kBinary:
      return std::make_unique<detail::BinaryEngine>(std::move(start));
    case EnumerationStrategy::kGeneral:
      return std::make_unique<detail::GeneralEngine>(std::move(start));
    case EnumerationStrategy::kAuto:
      break;
  }
  if (parikh(start).present_symbols().size() == 2) {
    return std::make_unique<detail::BinaryEngine>(std::move(start));
  }
  return std::make_unique<detail::GeneralEngine>(std::move(start));
}

}  // namespace

Enumerator::Enumerator(Word start, EnumerationStrategy strategy)
    : engine_(make_engine(std::move(start), strategy)) {}
Enumerator::~Enumerator() = default;
Enumerator::Enumerator(Enumerator&&) noexcept = default;
Enumerator& Enumerator::operator=(Enumerator&&) noexcept = default;

std::optional<Swap> Enumerator::next_swap() { return engine_->next(); }
const Word& Enumerator::start_word() const noexcept { return engine_->start(); }
const Word& Enumerator::current_word() const noexcept { return engine_->word(); }
const OrderedIndexSet& Enumerator::positions_of(Symbol x) const { return engine_->tree(x); }
DelayStats Enumerator::delay_stats() const noexcept { return engine_->stats(); }
bool Enumerator::uses_binary_routine() const noexcept { return engine_->binary(); }
std::size_t Enumerator::frame_depth() const noexcept { return engine_->depth(); }

EnumerationSummary enumerate_all(const Word& start, const std::function<void(const Swap&)>& sink,
                                 EnumerationStrategy strategy) {
  Enumerator e(start, strategy);
  EnumerationSummary summary;
  while (auto s = e.next_swap()) {
    sink(*s);
    ++summary.swaps;
  }
  summary.stats = e.delay_stats();
  summary.final_word = e.current_word();
  return summary;
}

DelayStats measure_delay(const Word& start, std::uint64_t max_steps,
                         EnumerationStrategy strategy) {
  Enumerator e(start, strategy);
  for (std::uint64_t k = 0; max_steps == 0 || k < max_steps; ++k) {
    if (!e.next_swap()) break;
  }
  return e.delay_stats();
}

std::string Checkpoint::serialize() const {
  std::ostringstream os;
  os << "sigma " << start.alphabet_size() << '\n'
     << "start " << start.to_string() << '\n'
     << "emitted " << emitted << '\n'
     << "current " << current.to_string() << '\n';
  return os.str();
}

Checkpoint Checkpoint::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string key;
  std::string value;
  int sigma = 0;
  std::string start;
  std::string current;
  std::optional<std::uint64_t> emitted;
  while (is >> key >> value) {
    if (key == "sigma") {
      sigma = std::stoi(value);
    } else if (key == "start") {
      start = value;
    } else if (key == "current") {
      current = value;
    } else if (key == "emitted") {
      emitted = std::stoull(value);
    } else {
      throw Error(Errc::kParse, "unknown checkpoint field '" + key + "'");
    }
  }
  if (start.empty() || current.empty() || !emitted) {
    throw Error(Errc::kParse, "checkpoint needs start, emitted and current");
  }
  return {Word::parse(start, sigma), *emitted, Word::parse(current, sigma)};
}

Enumerator resume(const Checkpoint& cp, EnumerationStrategy strategy) {
  Enumerator e(cp.start, strategy);
  for (std::uint64_t k = 0; k < cp.emitted; ++k) {
    if (!e.next_swap()) throw Error(Errc::kParse, "checkpoint is past the end of the stream");
  }
  if (e.current_word() != cp.current) {
    throw Error(Errc::kParse, "checkpoint replay reached " + e.current_word().to_string() +
                                  ", expected " + cp.current.to_string());
  }
  return e;
}

}  // namespace swapgraph
