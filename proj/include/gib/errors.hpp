#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gib {

/// Mismatched sizes between a matrix and an evaluation point, or between
/// two operands.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed user input (r-vectors, partitions, files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input that parses but is internally inconsistent.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by certified rank when an intermediate polynomial grows past the
/// configured term bound. Callers report "undecided" instead of a verdict.
struct ResourceLimitError : std::runtime_error {
  ResourceLimitError(std::size_t terms, std::size_t limit)
      : std::runtime_error("certified rank aborted: intermediate polynomial has " +
                           std::to_string(terms) + " terms (limit " +
                           std::to_string(limit) + ")"),
        terms(terms), limit(limit) {}
  std::size_t terms;
  std::size_t limit;
};

/// A bracket landed outside the expected graded piece.
struct GradingError : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace gib
