#include "swapgraph/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

namespace swapgraph {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kEqualSymbols: return "EqualSymbols";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kInvalidSymbol: return "InvalidSymbol";
    case Errc::kInvalidParikh: return "InvalidParikh";
    case Errc::kParikhMismatch: return "ParikhMismatch";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kDuplicate: return "Duplicate";
    case Errc::kMissing: return "Missing";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kUnknownVertex: return "UnknownVertex";
    case Errc::kInvalidCover: return "InvalidCover";
    case Errc::kEmptyWord: return "EmptyWord";
    case Errc::kParse: return "Parse";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
bool parse_unsigned(std::string_view text, T& out) {
  text = trim(text);
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), sigma_(alphabet_size) {
  if (sigma_ < 0) throw Error(Errc::kInvalidSymbol, "negative alphabet size");
  for (const Symbol x : symbols_) {
    if (x < 1 || x > sigma_) {
      throw Error(Errc::kInvalidSymbol,
                  "symbol " + std::to_string(x) + " outside [1, " +
                      std::to_string(sigma_) + "]");
    }
  }
}

Word Word::parse(std::string_view text, int alphabet_size) {
  text = trim(text);
  std::vector<Symbol> symbols;
  if (text.find(',') != std::string_view::npos) {
    for (const auto part : split_commas(text)) {
      Symbol x = 0;
      if (!parse_unsigned(part, x)) {
        throw Error(Errc::kParse, "bad symbol '" + std::string(part) + "'");
      }
      symbols.push_back(x);
    }
  } else {
    for (const char c : text) {
      if (c < '0' || c > '9') {
        throw Error(Errc::kParse, "bad word '" + std::string(text) + "'");
      }
      symbols.push_back(c - '0');
    }
  }
  if (alphabet_size == 0) {
    alphabet_size = symbols.empty() ? 1 : *std::max_element(symbols.begin(), symbols.end());
  }
  return Word(std::move(symbols), alphabet_size);
}

Symbol Word::at(Position i) const {
  if (i < 1 || i > symbols_.size()) {
    throw Error(Errc::kOutOfRange, "position " + std::to_string(i));
  }
  return symbols_[i - 1];
}

std::string Word::to_string() const {
  std::string out;
  if (sigma_ <= 9) {
    out.reserve(symbols_.size());
    for (const Symbol x : symbols_) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(symbols_[k]);
  }
  return out;
}

ParikhVector ParikhVector::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::uint64_t> counts;
  for (const auto part : split_commas(text)) {
    std::uint64_t c = 0;
    if (!parse_unsigned(part, c)) {
      throw Error(Errc::kInvalidParikh, "bad count '" + std::string(part) + "'");
    }
    counts.push_back(c);
  }
  return ParikhVector(std::move(counts));
}

std::uint64_t ParikhVector::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t ParikhVector::max_count() const noexcept {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

std::vector<Symbol> ParikhVector::present_symbols() const {
  std::vector<Symbol> out;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] > 0) out.push_back(static_cast<Symbol>(k + 1));
  }
  return out;
}

std::string ParikhVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(counts_[k]);
  }
  out.push_back(')');
  return out;
}

Swap::Swap(Position a, Position b) : i_(std::min(a, b)), j_(std::max(a, b)) {
  if (a == 0 || b == 0) throw Error(Errc::kOutOfRange, "positions are 1-based");
  if (a == b) throw Error(Errc::kOutOfRange, "swap needs two distinct positions");
}

std::string Swap::to_string() const {
  return std::to_string(i_) + " " + std::to_string(j_);
}

Swap Swap::parse(std::string_view text) {
  text = trim(text);
  const auto space = text.find_first_of(" \t");
  if (space == std::string_view::npos) {
    throw Error(Errc::kParse, "expected 'i j', got '" + std::string(text) + "'");
  }
  auto rest = trim(text.substr(space));
  // Anything after the second integer (the verbose "-> word" suffix) is ignored.
  const auto tail = rest.find_first_of(" \t");
  if (tail != std::string_view::npos) rest = rest.substr(0, tail);
  Position a = 0;
  Position b = 0;
  if (!parse_unsigned(text.substr(0, space), a) || !parse_unsigned(rest, b)) {
    throw Error(Errc::kParse, "expected 'i j', got '" + std::string(text) + "'");
  }
  return Swap(a, b);
}

ParikhVector parikh(const Word& w) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(w.alphabet_size()), 0);
  for (const Symbol x : w.symbols()) ++counts[x - 1];
  return ParikhVector(std::move(counts));
}

Word apply_swap(const Word& w, const Swap& s) {
  if (s.j() > w.size()) {
    throw Error(Errc::kOutOfRange, "swap (" + s.to_string() + ") on word of length " +
                                       std::to_string(w.size()));
  }
  if (w[s.i()] == w[s.j()]) {
    throw Error(Errc::kEqualSymbols, "positions " + s.to_string() + " hold the same symbol");
  }
  Word out = w;
  out.transpose(s.i(), s.j());
  return out;
}

BigInt count_words(const ParikhVector& p) {
  // Product of binomials C(prefix_total, count): exact and avoids n! blowup.
  BigInt result = 1;
  std::uint64_t placed = 0;
  for (const auto c : p.counts()) {
    for (std::uint64_t k = 1; k <= c; ++k) {
      result *= placed + k;
      result /= k;
    }
    placed += c;
  }
  return result;
}

Word first_word(const ParikhVector& p) {
  std::vector<Symbol> symbols;
  symbols.reserve(p.total());
  for (int x = 1; x <= p.alphabet_size(); ++x) {
    symbols.insert(symbols.end(), p[x], x);
  }
  return Word(std::move(symbols), p.alphabet_size());
}

std::vector<Word> all_words(const ParikhVector& p) {
  std::vector<Word> out;
  Word w = first_word(p);
  std::vector<Symbol> buf(w.symbols().begin(), w.symbols().end());
  do {
    out.emplace_back(buf, p.alphabet_size());
  } while (std::next_permutation(buf.begin(), buf.end()));
  return out;
}

Word balanced_random_word(std::size_t n, int sigma, std::uint64_t seed) {
  if (sigma < 1) throw Error(Errc::kInvalidSymbol, "alphabet size must be positive");
  std::vector<Symbol> symbols(n);
  for (std::size_t k = 0; k < n; ++k) symbols[k] = static_cast<Symbol>(k % sigma) + 1;
  std::mt19937_64 rng(seed);
  std::shuffle(symbols.begin(), symbols.end(), rng);
  return Word(std::move(symbols), sigma);
}

}  // namespace swapgraph
