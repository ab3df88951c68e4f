#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicdet {

enum class ErrorCode {
  // fields
  NonPrime,
  Reducible,
  UnsupportedSize,
  DivisionByZero,
  FieldMismatch,
  NotAnExtension,
  // plane geometry
  NotOnCurve,
  SingularPoint,
  SingularInput,
  // representations
  NotNormalized,
  WrongCase,
  IsBasePoint,
  BrokenInvariant,
  NoRationalPoint,
  BudgetExceeded,
  BadCharacteristic,
  SingularCurve,
  ZeroCoordinate,
  // counting
  BadDiscriminant,
  AmbiguousT,
  NoSolution,
  // census
  TooLarge,
  // I/O
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures of a mathematical precondition (as opposed to parse
  /// or internal errors).
  bool is_precondition() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace cubicdet
