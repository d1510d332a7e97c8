#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqm {

enum class ErrorCode {
  EmptyInput,
  OddEndpointCount,
  NonIncreasing,
  NonFinite,
  OnCut,
  ZeroCapacityInput,
  InvalidInterval,
  InvalidConfig,
  TailDivergence,
  SingularSystem,
  OutsideSupport,
  NoSignChange,
  FrostmanInconsistent,
  NotNormalized,
  PoleTooClose,
  HypothesisViolated,
  OutOfRange,
  AreaViolated,
  NotSymmetric,
  NoConvergence,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::OddEndpointCount: return "OddEndpointCount";
    case ErrorCode::NonIncreasing: return "NonIncreasing";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::OnCut: return "OnCut";
    case ErrorCode::ZeroCapacityInput: return "ZeroCapacityInput";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::TailDivergence: return "TailDivergence";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::FrostmanInconsistent: return "FrostmanInconsistent";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::PoleTooClose: return "PoleTooClose";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::AreaViolated: return "AreaViolated";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace eqm
