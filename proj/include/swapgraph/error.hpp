#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swapgraph {

enum class Errc {
  kEqualSymbols,
  kOutOfRange,
  kInvalidSymbol,
  kInvalidParikh,
  kParikhMismatch,
  kLengthMismatch,
  kDuplicate,
  kMissing,
  kTooLarge,
  kUnknownVertex,
  kInvalidCover,
  kEmptyWord,
  kParse,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace swapgraph
