#pragma once

#include <stdexcept>
#include <string>

namespace tk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Dimensions of the arguments disagree.
class DimensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A result could not be certified by its independent check. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tk
