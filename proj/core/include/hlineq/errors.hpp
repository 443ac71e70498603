#pragma once

#include <stdexcept>
#include <string>

namespace hlineq {

/// Base for every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, out-of-range slot, bad exponent.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A valid value used where the operation is undefined (e.g. conjugate of infinity as a ball exponent).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Zero form or zero functional where a nonzero one is required.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration or grid would exceed the configured budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A regime hypothesis does not hold; the message names the violated inequality.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant failed at runtime. Indicates a bug, never bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace hlineq
