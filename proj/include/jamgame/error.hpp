#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jamgame {

enum class ErrorCode {
  kNonPositiveParameter,
  kBudgetOutOfRange,
  kZeroGrid,
  kPowerOutOfRange,
  kDimensionMismatch,
  kInvalidStrategy,
  kUnsupportedGrid,
  kInvalidArgument,
  kIndexOutOfRange,
  kInfeasibleSemiUniform,
  kNotOnGrid,
  kZeroPackets,
  kDomainTooExtreme,
  kInfeasible,
  kNumericalBreakdown,
  kQuadratureNonConvergence,
};

std::string_view error_code_name(ErrorCode code);

// True for failures of a numerical procedure (as opposed to bad input).
bool is_numerical(ErrorCode code);

// The single exception type thrown by the library; `code()` identifies the
// failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jamgame
