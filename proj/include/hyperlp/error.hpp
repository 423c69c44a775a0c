#pragma once

#include <stdexcept>
#include <string>

namespace hyperlp {

// Base of every error raised by the library. Subclasses map onto the CLI
// exit codes (validation = 2, data = 3, everything else = 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments, bad configuration values, violated preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed or insufficient input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// A computation exceeded a configured resource cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An iterative method did not meet its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperlp
