#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcsp {

enum class ErrorCode {
  InvalidArgument,
  NonIsometricRotation,
  NoCrossing,
  EmptyInput,
  NoBisectorRoot,
  UnsupportedNorm,
  TooLarge,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonIsometricRotation: return "NonIsometricRotation";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NoBisectorRoot: return "NoBisectorRoot";
    case ErrorCode::UnsupportedNorm: return "UnsupportedNorm";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

// Every failure raised by the solvers carries one of the codes above; the CLI
// reports `name()` verbatim in its error envelope.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace lcsp
