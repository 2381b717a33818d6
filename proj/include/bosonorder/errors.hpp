#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bosonorder {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A produced monomial exceeds the configured total-degree cap.
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Discarded tail mass of a truncated series is above the allowed bound.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class QuadratureOrderError : public Error {
 public:
  using Error::Error;
};

/// Symbol does not satisfy the reality / hermiticity precondition.
class SymbolError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Value cannot be represented exactly in the requested scalar type.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at column " + std::to_string(position + 1) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bosonorder
