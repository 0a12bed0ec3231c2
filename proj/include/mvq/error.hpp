#pragma once

#include <stdexcept>
#include <string>

namespace mvq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text. Carries a 1-based line number when known.
struct ParseError : Error {
  int line = 0;
  ParseError(const std::string& msg, int line_ = 0)
      : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg), line(line_) {}
};

// Structurally well-formed input that violates a model invariant.
struct ValidationError : Error {
  using Error::Error;
};

// A configurable resource cap was exceeded (group closure, oracle, state sum).
struct BudgetError : Error {
  using Error::Error;
};

// Operation applied outside its precondition (e.g. division in a magma that
// is not a right quasigroup).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace mvq
