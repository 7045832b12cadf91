#include "kummergap/error.hpp"

namespace kummergap {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::NotSemigroup: return "NOT_SEMIGROUP";
    case ErrorCode::InvalidBase: return "INVALID_BASE";
    case ErrorCode::NotTotallyRamified: return "NOT_TOTALLY_RAMIFIED";
    case ErrorCode::TotallyRamified: return "TOTALLY_RAMIFIED";
    case ErrorCode::RatioUndefined: return "RATIO_UNDEFINED";
    case ErrorCode::HypothesisViolated: return "HYPOTHESIS_VIOLATED";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace kummergap
