#pragma once

#include <stdexcept>
#include <string>

namespace ncdiff {

/// Base class of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or ambient dimensions do not agree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Two values built over different ground fields were combined.
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("field mismatch") {}
};

/// An argument violates a documented precondition (bad catalog name,
/// non-homogeneous input to a graded operation, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An input operator was required to belong to some space and does not.
class NotMember : public Error {
 public:
  using Error::Error;
};

/// A spec file could not be parsed or does not describe a valid object.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncdiff
