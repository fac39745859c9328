#pragma once

#include <stdexcept>
#include <string>

namespace ept {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects built over different sample spaces were combined.
class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

/// A textual input (partition literal, JSON document, ...) is malformed.
/// The message names the offending token.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments are syntactically fine but violate a documented precondition
/// (overlapping supports, event outside a context, asymmetric matrix, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search was requested beyond its documented size cap.
/// The message states the cap and the expected result size where known.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A numeric validation failed: a state is not strongly positive, a
/// context is not regular for the given state, a distribution or
/// transformation is not stochastic, or additivity is broken.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ept
