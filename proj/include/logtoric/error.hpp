#pragma once

#include <stdexcept>
#include <string>

namespace logtoric {

/// Base class for every exception raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (dimension mismatch,
/// unsaturated input where saturation is required, cone not a face, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

} // namespace logtoric
