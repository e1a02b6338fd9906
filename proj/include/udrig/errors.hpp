#pragma once

#include <stdexcept>
#include <string>

namespace udrig {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally malformed configuration or input file; the message names the
/// offending field.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operation precondition not met (unknown label, dimension mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace udrig
