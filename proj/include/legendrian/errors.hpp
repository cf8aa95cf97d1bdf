#pragma once

#include <stdexcept>
#include <string>

namespace legendrian {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A coefficient was requested that the available precision cannot guarantee.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// The conormal semigroup of a curve is not the generic one.
class NonGenericCurve : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace legendrian
