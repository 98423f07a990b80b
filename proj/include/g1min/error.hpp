#pragma once

#include <stdexcept>
#include <string>

namespace g1min {

enum class ErrorCode {
  NotPrime,
  NonIntegralCoefficient,
  DimensionMismatch,
  DegreeMismatch,
  SingularInput,
  NonIntegralLevel,
  DerivationFailed,
  SingularGenericFiber,
  UnsupportedResidueField,
  UnsupportedPrime,
  PositionViolation,
  ParseError,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::NonIntegralLevel: return "NonIntegralLevel";
    case ErrorCode::DerivationFailed: return "DerivationFailed";
    case ErrorCode::SingularGenericFiber: return "SingularGenericFiber";
    case ErrorCode::UnsupportedResidueField: return "UnsupportedResidueField";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::PositionViolation: return "PositionViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace g1min
