#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectral {

// Argument or precondition violation (bad generator parameters, length
// mismatch, non-regular graph passed to a regular-only check, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A randomized builder exhausted its retry budget.
class ConstructionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative numerics did not reach the requested accuracy.
class ConvergenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerically degenerate input: zero vector, isolated vertex under the walk
// operator, a sign pattern whose every edge is excluded.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized graph; `position` is a byte offset for graph6 input
// and a 1-based line number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A named graph whose data file has not been provisioned.  Distinct from
// ParseError so callers can degrade to skip-with-warning.
class NotProvisioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spectral
