#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bfpp {

/// Thrown by every text parser in the library. `position()` is a byte offset
/// into the original input.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string const& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A map that must be fixed point free fixed something, or a fixed point
/// transfer failed its own verification. Always a defect.
class UnexpectedFixedPoint : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace bfpp
