#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabdiv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambients (variable count or channel count).
class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A zero polynomial was given where a nonzero one is required
/// (leading term of 0, division by 0, S-polynomial of 0).
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `column` is 1-based; `line` is 1-based when the
/// caller knows which line of a multi-line source failed, 0 otherwise.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column, std::size_t line = 0)
      : Error(what), column_(column), line_(line) {}

  std::size_t column() const { return column_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t column_;
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The polynomial to decompose is not an element of the module.
class MembershipError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// The Hilbert function was not yet polynomial on the sampled window.
class WindowTooSmallError : public Error {
 public:
  WindowTooSmallError(const std::string& what, int suggested_start)
      : Error(what), suggested_start_(suggested_start) {}

  int suggested_start() const { return suggested_start_; }

 private:
  int suggested_start_;
};

/// A result that must hold by construction did not hold.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A quantitative bound that the algorithm guarantees was violated.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace stabdiv
