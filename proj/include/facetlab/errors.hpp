#pragma once

#include <stdexcept>
#include <string>

namespace facetlab {

// Base class for all library errors.  The CLI maps subtypes to exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Field construction with a composite (or < 2) modulus.
struct NonPrimeModulus : Error {
  using Error::Error;
};

// Malformed argument: unsorted vertex tuple, vertex out of range, bad grid.
struct InvalidParameter : Error {
  using Error::Error;
};

// Malformed JSON input; the message names the offending field.
struct ParseError : Error {
  using Error::Error;
};

// A documented precondition does not hold (set too large, wrong dimension).
struct PreconditionViolated : Error {
  using Error::Error;
};

// Requested enumeration exceeds the hard instance budget.
struct InstanceTooLarge : Error {
  using Error::Error;
};

// A step that is mathematically guaranteed to succeed failed; indicates a
// bug rather than bad input.
struct InternalInconsistency : Error {
  using Error::Error;
};

// Verification was requested for an unregistered check id.
struct UnknownTheorem : Error {
  using Error::Error;
};

}  // namespace facetlab
