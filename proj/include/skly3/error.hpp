#pragma once

#include <stdexcept>
#include <string>

namespace skly3 {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different coefficient fields.
class FieldMismatch : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by its input.
class PreconditionError : public Error {
public:
  using Error::Error;
};

} // namespace skly3
