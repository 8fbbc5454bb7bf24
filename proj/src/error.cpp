#include "latentgeo/error.hpp"

namespace latentgeo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::NonPositiveCurvature: return "NonPositiveCurvature";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::CalibrationInfeasible: return "CalibrationInfeasible";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::DegenerateRow: return "DegenerateRow";
    case ErrorCode::EmptySamples: return "EmptySamples";
    case ErrorCode::TooFewReplicates: return "TooFewReplicates";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace latentgeo
