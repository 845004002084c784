#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamtsp {

enum class ErrorCode {
  kNotAPermutation,
  kIndexOutOfRange,
  kInfeasibleSublist,
  kBadParameter,
  kSymmetryViolation,
  kParseError,
  kIoError,
  kNotASpanningTree,
  kDisconnected,
  kGreedyStuck,
  kNoCoordinates,
  kZeroLengthSegment,
  kTourInstanceMismatch,
  kBudgetExhausted,
  kTooLarge,
  kDimensionMismatch,
  kBadPrefix,
  kTargetAbsent,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception; `code()` is the
// stable, machine-readable part.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hamtsp
