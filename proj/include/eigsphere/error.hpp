#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eigsphere {

enum class ErrorKind {
  DimensionMismatch,
  ZeroPolynomial,
  DivisionByZeroPolynomial,
  IndexOutOfRange,
  SyntaxError,
  VariableOutOfRange,
  NegativeExponent,
  SphereDimensionTooSmall,
  MixedDegrees,
  NotAnEigenfunction,
  NonConvergence,
  SingularJacobian,
  InsufficientYield,
  OffVariety,
  DegeneratePoint,
  PoleSingularity,
  IOError,
  ZeroLine,
  EmptyFiber,
  SingularFiber,
  BothZero,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parser failure with the 0-based byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::SyntaxError,
              "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace eigsphere
