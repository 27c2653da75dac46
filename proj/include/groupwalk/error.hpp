#pragma once

#include <stdexcept>
#include <string>

namespace groupwalk {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
struct InvalidParameterError : Error {
  using Error::Error;
};

/// Malformed input text. `line` is 1-based; 0 when no line applies.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

/// A theorem hypothesis does not hold for the given input (e.g. a
/// non-positive matrix passed to the Perron check). Distinct from a
/// check that ran and failed.
struct HypothesisError : Error {
  using Error::Error;
};

/// A configured resource cap was exceeded (rational bit size, sampling
/// modulus). Signals that the caller should switch to the float pipeline
/// or reduce the problem size.
struct ResourceLimitError : Error {
  using Error::Error;
};

/// A numeric routine failed to converge.
struct NumericError : Error {
  using Error::Error;
};

/// The input lacks the algebraic structure an operation relies on
/// (non-group table fed to a construction that needs a group).
struct StructureError : Error {
  using Error::Error;
};

}  // namespace groupwalk
