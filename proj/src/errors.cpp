#include "qchsh/errors.hpp"

namespace qchsh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::NotTraceless: return "NotTraceless";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotInLd: return "NotInLd";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::ImaginaryResidual: return "ImaginaryResidual";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::DegenerateDirection: return "DegenerateDirection";
    case ErrorKind::BothDegenerate: return "BothDegenerate";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::ImaginaryResidual:
    case ErrorKind::DegenerateDirection:
    case ErrorKind::BothDegenerate:
    case ErrorKind::VerificationFailed:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace qchsh
