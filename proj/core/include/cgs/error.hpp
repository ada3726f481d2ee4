#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgs {

// Every failure the library reports carries one of these codes; the CLI maps
// them onto process exit codes.
enum class ErrorCode {
  NotMonic,
  Reducible,
  DegreeTooSmall,
  ZeroPolynomial,
  ZeroElement,
  BoundTooSmall,
  UnsupportedPrime,
  InvalidArgument,
  BudgetExhausted,
  RankDeficient,
  DomainError,
  HintViolatesClassD,
  WrongRegime,
  ScheduleInfeasible,
  ZeroIdeal,
  ReductionFailed,
  DescentBudgetExhausted,
  NotPrincipalInLattice,
  HashMismatch,
  OracleDomain,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cgs
