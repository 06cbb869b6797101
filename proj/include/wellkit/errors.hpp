#pragma once

#include <stdexcept>
#include <string>

namespace wellkit {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tabular input violates the expected schema: missing column, empty input,
/// duplicate (well, depth) key.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A structured file is malformed or uses a feature outside the supported
/// subset (e.g. wrapped LAS data).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An argument or configuration value is invalid for the operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Operand dimensions are inconsistent.
class ShapeError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Too few rows for the requested fit.
class InsufficientDataError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// predict() called before fit().
class NotFittedError : public Error {
 public:
  using Error::Error;
};

/// A numeric procedure produced non-finite values or failed to converge
/// to a usable result.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace wellkit
