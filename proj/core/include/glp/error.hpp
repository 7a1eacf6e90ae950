#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glp {

/// Malformed textual input. `position()` is a 0-based byte offset into the
/// text that was being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A well-formed input that violates an operation's precondition
/// (transfinite index where a natural one is required, m > n, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace glp
