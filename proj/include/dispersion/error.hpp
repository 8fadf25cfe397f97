#pragma once

#include <stdexcept>
#include <string>

namespace dispersion {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic left the checked 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A structural guarantee was violated by an internal computation. Never
/// expected on valid input; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace dispersion
