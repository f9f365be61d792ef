#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gzbt {

enum class ErrorCode {
  ZeroInput,
  UnsupportedField,
  ElementArithmeticUnsupported,
  FiniteIndex,
  HasRationalPoint,
  DegenerateConic,
  ValidationInconclusive,
  InvalidCurve,
  DivisionByZero,
  NotIntegralAtInfinity,
  SingularMatrix,
  NotInG,
  ZeroTuple,
  ConstructionFailed,
  VerificationIncomplete,
  Parse,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::ElementArithmeticUnsupported: return "ElementArithmeticUnsupported";
    case ErrorCode::FiniteIndex: return "FiniteIndex";
    case ErrorCode::HasRationalPoint: return "HasRationalPoint";
    case ErrorCode::DegenerateConic: return "DegenerateConic";
    case ErrorCode::ValidationInconclusive: return "ValidationInconclusive";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotIntegralAtInfinity: return "NotIntegralAtInfinity";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotInG: return "NotInG";
    case ErrorCode::ZeroTuple: return "ZeroTuple";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::VerificationIncomplete: return "VerificationIncomplete";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this type; the
/// code distinguishes the cases callers are expected to handle.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace gzbt
