#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shadowlab {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid input for an operation: bad hypotheses, mismatched ground sets,
// out-of-range vertices, and the like.
struct DomainError : Error {
  using Error::Error;
};

// A family was not (or was not suitably) uniform.
struct UniformityError : DomainError {
  using DomainError::DomainError;
};

// Ill-formed link specification (anchor meets the exclusion set).
struct SpecError : DomainError {
  using DomainError::DomainError;
};

// ".fam" input could not be parsed. `line` is 1-based; the message already
// starts with "<line>:" so callers can prepend a file name directly.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error(std::to_string(line_) + ": " + what_), line(line_) {}
};

// An enumeration hit its node budget. `visited` counts the nodes fully
// processed before the abort.
struct BudgetExceeded : Error {
  std::uint64_t visited;
  explicit BudgetExceeded(std::uint64_t visited_)
      : Error("node budget exceeded after " + std::to_string(visited_) +
              " nodes"),
        visited(visited_) {}
};

// An internal consistency check failed: a certified claim did not replay, or
// a proved statement was contradicted. Always a bug, never a property of the
// input.
struct CertificationError : Error {
  using Error::Error;
};

}  // namespace shadowlab
