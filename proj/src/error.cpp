#include "sspread/error.hpp"

namespace sspread {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::not_projection: return "NotProjection";
    case ErrorCode::not_positive: return "NotPositive";
    case ErrorCode::not_projection_sum: return "NotProjectionSum";
    case ErrorCode::dimension_mismatch: return "DimMismatch";
    case ErrorCode::horizon_mismatch: return "HorizonMismatch";
    case ErrorCode::mode_error: return "ModeError";
    case ErrorCode::insufficient_sampling: return "InsufficientSampling";
    case ErrorCode::range_not_contained: return "RangeNotContained";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unknown_kind: return "UnknownKind";
    case ErrorCode::unknown_example: return "UnknownExample";
    case ErrorCode::unknown_inequality: return "UnknownInequality";
  }
  return "Unknown";
}

}  // namespace sspread
