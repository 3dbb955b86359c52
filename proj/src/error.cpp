#include "godisc/error.hpp"

namespace godisc {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::UnknownDataset: return "UnknownDataset";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularWithinScatter: return "SingularWithinScatter";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ComplexDominant: return "ComplexDominant";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::SingularT: return "SingularT";
    case ErrorCode::OrthogonalityLoss: return "OrthogonalityLoss";
    case ErrorCode::SingularRecursionMatrix: return "SingularRecursionMatrix";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegenerateCovariance: return "DegenerateCovariance";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
  }
  return "UnknownError";
}

}  // namespace godisc
