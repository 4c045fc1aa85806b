#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxl2 {

/// Stable machine-readable error codes. The CLI prints `code_name(code)`.
enum class ErrorCode {
  DiagonalNotOne,
  Asymmetric,
  OffDiagonalBelowTwo,
  DimensionMismatch,
  UnknownGenerator,
  CapExceeded,
  NotIrreducible,
  InfiniteLabel,
  NotFinite,
  SingularAtZero,
  PoleAtQ,
  UnsupportedWeightShape,
  InvalidWeight,
  InvalidComplex,
  IdentityViolation,
  Inconsistency,
  InputNotDetermined,
  ParseError,
  ValidationError,
  NumericalFailure,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DiagonalNotOne: return "DiagonalNotOne";
    case ErrorCode::Asymmetric: return "Asymmetric";
    case ErrorCode::OffDiagonalBelowTwo: return "OffDiagonalBelowTwo";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::InfiniteLabel: return "InfiniteLabel";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::SingularAtZero: return "SingularAtZero";
    case ErrorCode::PoleAtQ: return "PoleAtQ";
    case ErrorCode::UnsupportedWeightShape: return "UnsupportedWeightShape";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::Inconsistency: return "InconsistencyError";
    case ErrorCode::InputNotDetermined: return "InputNotDetermined";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coxl2
