#pragma once

#include <stdexcept>
#include <string>

namespace htype {

/// Base class for every error raised by the library.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dimension parameter (m, n, block count) is zero or otherwise unusable.
class InvalidDimension : public Error {
 public:
  using Error::Error;
};

/// Operands do not match the dimensions of the ambient algebra.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Repeated points, a zero direction vector, or a nonpositive dilation.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Malformed interchange data. `field()` names the offending JSON field.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace htype
