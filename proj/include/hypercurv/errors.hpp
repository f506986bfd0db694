#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypercurv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A function or field was handed the wrong number of arguments.
class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t expected, std::size_t got)
      : Error("arity mismatch: expected " + std::to_string(expected) +
              " arguments, got " + std::to_string(got)) {}
};

/// Division by a ring element whose real part is zero.
class RingDivisionError : public Error {
 public:
  RingDivisionError() : Error("division by an element with zero real part") {}
};

/// Caller violated a documented precondition (dimension, n range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Expression text could not be parsed. `offset()` is the byte offset of the
/// offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class OffSurfaceError : public Error {
 public:
  using Error::Error;
};

class CriticalPointError : public Error {
 public:
  using Error::Error;
};

class NonTangentError : public Error {
 public:
  using Error::Error;
};

class DeterminantNotOneError : public Error {
 public:
  using Error::Error;
};

class NotUnitNormError : public Error {
 public:
  using Error::Error;
};

class NonPositiveDeterminantError : public Error {
 public:
  using Error::Error;
};

class NonZeroTraceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypercurv
