#include "jamgame/error.hpp"

namespace jamgame {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::kBudgetOutOfRange: return "BudgetOutOfRange";
    case ErrorCode::kZeroGrid: return "ZeroGrid";
    case ErrorCode::kPowerOutOfRange: return "PowerOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidStrategy: return "InvalidStrategy";
    case ErrorCode::kUnsupportedGrid: return "UnsupportedGrid";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInfeasibleSemiUniform: return "InfeasibleSemiUniform";
    case ErrorCode::kNotOnGrid: return "NotOnGrid";
    case ErrorCode::kZeroPackets: return "ZeroPackets";
    case ErrorCode::kDomainTooExtreme: return "DomainTooExtreme";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kNumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::kQuadratureNonConvergence: return "QuadratureNonConvergence";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  return code == ErrorCode::kInfeasible ||
         code == ErrorCode::kNumericalBreakdown ||
         code == ErrorCode::kQuadratureNonConvergence;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace jamgame
