#include "cgs/error.hpp"

namespace cgs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::HintViolatesClassD: return "HintViolatesClassD";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::ScheduleInfeasible: return "ScheduleInfeasible";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::ReductionFailed: return "ReductionFailed";
    case ErrorCode::DescentBudgetExhausted: return "DescentBudgetExhausted";
    case ErrorCode::NotPrincipalInLattice: return "NotPrincipalInLattice";
    case ErrorCode::HashMismatch: return "HashMismatch";
    case ErrorCode::OracleDomain: return "OracleDomain";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cgs
