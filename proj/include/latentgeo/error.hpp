#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latentgeo {

enum class ErrorCode {
  MalformedLine,
  SelfLoop,
  EmptyInput,
  Disconnected,
  TooSmall,
  DimensionUnsupported,
  NonPositiveCurvature,
  SizeMismatch,
  InfeasibleTarget,
  CalibrationInfeasible,
  KOutOfRange,
  DegenerateRow,
  EmptySamples,
  TooFewReplicates,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the study harness) can branch on it without parsing
/// messages.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace latentgeo
