#pragma once

#include <stdexcept>
#include <string>

namespace sesq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: non-finite entries, shape or dimension mismatch,
/// a matrix that is not Hermitian positive semidefinite.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotPsdError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A mathematical hypothesis of an operation does not hold
/// (e.g. "t not dominated by w").
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class EigenSolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace sesq
