#pragma once

#include <stdexcept>
#include <string>

namespace aec {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Missing or unwritable file.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Structural or cell-level CSV failure; the message names the offending
/// line/column where known.
class CsvError : public IoError {
 public:
  using IoError::IoError;
};

/// Input violates a documented precondition (shape, range, degeneracy).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Normal-equations matrix is singular or too ill-conditioned to solve.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver produced a non-finite intermediate.
class SolverDivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace aec
