#pragma once

#include <stdexcept>
#include <string>

namespace solvstab {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented size or degree bound was exceeded; the operation refuses
/// rather than guessing or approximating.
struct BoundError : Error {
  using Error::Error;
};

/// Operands live on incompatible domains (degree, dimension, characteristic).
struct DomainMismatch : Error {
  using Error::Error;
};

/// A precondition of the operation does not hold (intransitive group passed
/// to a block computation, zero vector passed to spin, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// derived_length was asked of a group whose derived series does not reach
/// the trivial group.
struct NotSolvable : Error {
  using Error::Error;
};

/// Text or JSON input could not be parsed or failed validation.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace solvstab
