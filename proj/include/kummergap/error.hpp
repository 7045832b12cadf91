#pragma once

#include <stdexcept>
#include <string>

namespace kummergap {

// Stable numeric values: these are exported unchanged through the C API.
enum class ErrorCode : int {
  InvalidArgument = 1,
  NotSemigroup = 2,
  InvalidBase = 3,
  NotTotallyRamified = 4,
  TotallyRamified = 5,
  RatioUndefined = 6,
  HypothesisViolated = 7,
  Overflow = 8,
  Internal = 9,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kummergap
