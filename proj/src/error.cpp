#include "eulersub/error.hpp"

namespace eulersub {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RadicandMismatch: return "RadicandMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::RadicandDegenerate: return "RadicandDegenerate";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::PoleEvaluation: return "PoleEvaluation";
    case ErrorCode::ParabolicCase: return "ParabolicCase";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoRealPoints: return "NoRealPoints";
    case ErrorCode::AnchorPoint: return "AnchorPoint";
    case ErrorCode::InexactParameterization: return "InexactParameterization";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NonFiniteEvaluation: return "NonFiniteEvaluation";
    case ErrorCode::PoleInInterval: return "PoleInInterval";
    case ErrorCode::ArcMismatch: return "ArcMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ToleranceExceeded: return "ToleranceExceeded";
  }
  return "Unknown";
}

}  // namespace eulersub
