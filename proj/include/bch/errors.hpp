#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bch {

/// A precondition on an argument was violated (N < 1, empty word, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input. `position()` is the 0-based offset of the
/// first offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bch
