#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polydom {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class InvalidModulusError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A domain does not provide the requested operation (e.g. gcd on matrices).
class UnsupportedOpError : public Error {
 public:
  using Error::Error;
};

/// The axiom suite was asked for a structure the domain cannot express.
class UnsupportedStructureError : public Error {
 public:
  using Error::Error;
};

/// Groebner routines reject the coefficient domain (matrices, composite modulus).
class UnsupportedDomainError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class NonDivisibleError : public Error {
 public:
  using Error::Error;
};

class InexactDivisionError : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

class RingError : public Error {
 public:
  using Error::Error;
};

class EmptyPolynomialError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in polynomial text; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Structural error in a problem file; message carries the line number.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace polydom
