#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecp {

enum class ErrorCode {
  // input / guard errors
  ParseError,
  LabelOutOfRange,
  CycleDetected,
  NotAnIdeal,
  NotNaturallyLabeled,
  NotPalindromic,
  InvalidPartition,
  PointOutsidePolytope,
  SizeLimit,
  GuardExceeded,
  // alarms: a computed quantity contradicts an identity that must hold
  NegativeHStar,
  NonInteger,
  GammaNegative,
  IdentityViolation,
  ImageMismatch,
  Infeasible,
  NonUnimodularSimplex,
  FaceCountMismatch,
  MalformedResult,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotNaturallyLabeled: return "NotNaturallyLabeled";
    case ErrorCode::NotPalindromic: return "NotPalindromic";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::PointOutsidePolytope: return "PointOutsidePolytope";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::NegativeHStar: return "NegativeHStar";
    case ErrorCode::NonInteger: return "NonInteger";
    case ErrorCode::GammaNegative: return "GammaNegative";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::ImageMismatch: return "ImageMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NonUnimodularSimplex: return "NonUnimodularSimplex";
    case ErrorCode::FaceCountMismatch: return "FaceCountMismatch";
    case ErrorCode::MalformedResult: return "MalformedResult";
  }
  return "Unknown";
}

/// Alarms signal that a claimed identity failed on some input. They are
/// never expected; the CLI maps them to exit code 2.
inline constexpr bool is_alarm(ErrorCode code) {
  return code >= ErrorCode::NegativeHStar;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool alarm() const noexcept { return is_alarm(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ecp
