#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hodge {

enum class ErrorCode {
  InvalidArgument,
  AsymmetricNumbers,
  EmptySupport,
  ConventionViolation,
  ZeroWeight,
  NotNormalized,
  WrongParity,
  OddInput,
  ParityBug,
  MiddleNumberZero,
  WeightTooSmall,
  TooSmall,
  ZeroHodgeNumber,
  DimensionOrder,
  BadN,
  CapExceeded,
  ParseError,
};

/// Stable kebab-case name, used in diagnostics and structured output.
std::string_view error_code_name(ErrorCode code);

class HodgeError : public std::runtime_error {
 public:
  HodgeError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hodge
