#include "cubicdet/error.hpp"

namespace cubicdet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotAnExtension: return "NotAnExtension";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::IsBasePoint: return "IsBasePoint";
    case ErrorCode::BrokenInvariant: return "BrokenInvariant";
    case ErrorCode::NoRationalPoint: return "NoRationalPoint";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::BadDiscriminant: return "BadDiscriminant";
    case ErrorCode::AmbiguousT: return "AmbiguousT";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool Error::is_precondition() const noexcept {
  switch (code_) {
    case ErrorCode::ParseError:
    case ErrorCode::BrokenInvariant:
    case ErrorCode::NoRationalPoint:
      return false;
    default:
      return true;
  }
}

}  // namespace cubicdet
