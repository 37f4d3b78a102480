#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtva {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix dimensions.
struct DimensionError : Error {
  using Error::Error;
};

/// Division by zero, zero denominators, and similar arithmetic misuse.
struct DomainError : Error {
  using Error::Error;
};

/// Malformed textual input (rationals, machine files, words).
struct ParseError : Error {
  using Error::Error;
};

/// A machine description violates a structural invariant.
struct ValidationError : Error {
  using Error::Error;
};

/// A word contains a symbol outside the machine's alphabet.
struct InputError : Error {
  using Error::Error;
};

/// A transform was applied to a machine it is not defined for.
struct NotApplicableError : Error {
  using Error::Error;
};

/// A simulation exceeded a configured resource limit.
struct ResourceLimitError : Error {
  ResourceLimitError(const std::string& msg, std::size_t step)
      : Error(msg), step(step) {}
  std::size_t step;
};

}  // namespace rtva
