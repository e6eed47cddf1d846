#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qchsh {

enum class ErrorKind {
  NotHermitian,
  ConvergenceFailure,
  DimensionMismatch,
  InvalidDimension,
  NotTraceless,
  ZeroVector,
  NotInLd,
  TraceNotOne,
  NotPositive,
  ImaginaryResidual,
  WrongDimension,
  DegenerateDirection,
  BothDegenerate,
  InvalidConfig,
  InvalidInput,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind);

// Numerical failures map to CLI exit code 2, everything else to 1.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qchsh
