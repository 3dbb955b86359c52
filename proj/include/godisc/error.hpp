#pragma once

#include <stdexcept>
#include <string>

namespace godisc {

enum class ErrorCode {
  ParseError,
  EmptyClass,
  ShapeError,
  UnknownDataset,
  IoError,
  InvalidArgument,
  SingularWithinScatter,
  NotBinary,
  ZeroVector,
  ConvergenceFailure,
  ComplexDominant,
  KTooLarge,
  DegenerateDirection,
  SingularT,
  OrthogonalityLoss,
  SingularRecursionMatrix,
  ShapeMismatch,
  DegenerateCovariance,
  TooFewSamples,
};

/// Stable identifier used in CLI diagnostics, e.g. "KTooLarge".
const char* error_name(ErrorCode code) noexcept;

/// Every failure in the library surfaces as this exception; `code()`
/// distinguishes the cases and `what()` carries the context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace godisc
