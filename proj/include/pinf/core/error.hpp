#pragma once

#include <stdexcept>
#include <string>

namespace pinf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-posed computation that has no answer (singular input, element
/// in the ideal, not invertible, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public MathError {
 public:
  DivisionByZero() : MathError("division by zero") {}
};

class NotInvertible : public MathError {
 public:
  using MathError::MathError;
};

/// Operands live in different fields, alphabets or algebras.
class Mismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: bad syntax, unknown letter, invalid parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t column)
      : InputError("syntax error at column " + std::to_string(column) + ": " + what),
        column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace pinf
