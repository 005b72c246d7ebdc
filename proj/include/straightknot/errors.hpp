#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace straightknot {

/// Malformed text input. `position` is the 0-based character offset of the
/// offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A word that has no classical realization was given where one is required.
class NotRealizableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cross ratio requested on intervals sharing an endpoint.
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant that the construction guarantees did not hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace straightknot
