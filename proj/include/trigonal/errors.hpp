#pragma once

#include <stdexcept>
#include <string>

namespace trigonal {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (negative order, genus out of range, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Division by zero or inversion of a non-unit.
class ArithmeticError : public Error {
public:
  using Error::Error;
};

/// Two truncated series with different orders were combined.
class OrderMismatch : public Error {
public:
  using Error::Error;
};

/// A product of linear t-polynomials would leave t-degree <= 1.
class DegreeOverflow : public Error {
public:
  using Error::Error;
};

class SingularSystem : public Error {
public:
  using Error::Error;
};

class InconsistentSystem : public Error {
public:
  using Error::Error;
};

/// A Hurwitz component label with the wrong parity or out of range.
class InvalidLabel : public Error {
public:
  using Error::Error;
};

}  // namespace trigonal
