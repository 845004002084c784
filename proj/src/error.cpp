#include "hamtsp/error.hpp"

namespace hamtsp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInfeasibleSublist: return "InfeasibleSublist";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kSymmetryViolation: return "SymmetryViolation";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kNotASpanningTree: return "NotASpanningTree";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kGreedyStuck: return "GreedyStuck";
    case ErrorCode::kNoCoordinates: return "NoCoordinates";
    case ErrorCode::kZeroLengthSegment: return "ZeroLengthSegment";
    case ErrorCode::kTourInstanceMismatch: return "TourInstanceMismatch";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kBadPrefix: return "BadPrefix";
    case ErrorCode::kTargetAbsent: return "TargetAbsent";
  }
  return "Unknown";
}

}  // namespace hamtsp
