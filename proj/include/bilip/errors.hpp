#pragma once

#include <stdexcept>
#include <string>

namespace bilip {

/// Base class of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: wrong ring, bad argument, constant where a curve is needed.
class DomainError : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public DomainError {
 public:
  RingMismatch() : DomainError("polynomials live in different rings") {}
};

class InexactDivision : public DomainError {
 public:
  InexactDivision() : DomainError("division is not exact") {}
};

class ParseError : public DomainError {
 public:
  ParseError(std::string message, int line, int column)
      : DomainError("line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A numeric procedure ran out of retries (non-generic projection, crossing tracks).
class ComputationFailure : public Error {
 public:
  using Error::Error;
};

/// A certified identity failed. Must never happen on valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bilip
