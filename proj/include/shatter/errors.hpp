#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shatter {

/// An operation was called outside its documented domain (empty class,
/// coordinate out of range, class not extremal, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed class or arrangement input. `line()` is 1-based, 0 when the
/// problem is not tied to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_{line} {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A search or resampling budget ran out before an answer was certified.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Something that the mathematics guarantees did not hold. Always a bug in
/// the caller or in this library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shatter
