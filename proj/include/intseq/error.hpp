#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intseq {

enum class ErrorCode {
  NotMonic,
  EmptyInput,
  DegreeTooLarge,
  InvalidShift,
  NoZeroRoot,
  DegreeTooSmall,
  ZeroRootPresent,
  DimensionMismatch,
  ZeroSeed,
  OutOfRange,
  ZeroDenominator,
  NormalizedModeUnsupported,
  CenterIsRoot,
  InvalidOptions,
  NonFiniteIntermediate,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::InvalidShift: return "InvalidShift";
    case ErrorCode::NoZeroRoot: return "NoZeroRoot";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ZeroRootPresent: return "ZeroRootPresent";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroSeed: return "ZeroSeed";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NormalizedModeUnsupported: return "NormalizedModeUnsupported";
    case ErrorCode::CenterIsRoot: return "CenterIsRoot";
    case ErrorCode::InvalidOptions: return "InvalidOptions";
    case ErrorCode::NonFiniteIntermediate: return "NonFiniteIntermediate";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace intseq
