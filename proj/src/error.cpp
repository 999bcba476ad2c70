#include "tangentfree/error.hpp"

namespace tangentfree {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IdenticalPoints: return "IdenticalPoints";
    case ErrorCode::IdenticalLines: return "IdenticalLines";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DegenerateConic: return "DegenerateConic";
    case ErrorCode::OddOrderRequired: return "OddOrderRequired";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::PointsOnInfinity: return "PointsOnInfinity";
    case ErrorCode::WrongSize: return "WrongSize";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidA: return "InvalidA";
    case ErrorCode::QTooSmall: return "QTooSmall";
    case ErrorCode::RTooLarge: return "RTooLarge";
    case ErrorCode::NotExterior: return "NotExterior";
    case ErrorCode::NotExternal: return "NotExternal";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::PrimeField: return "PrimeField";
    case ErrorCode::TimeBudgetExceeded: return "TimeBudgetExceeded";
    case ErrorCode::NotCodeword: return "NotCodeword";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Format: return "Format";
  }
  return "Unknown";
}

}  // namespace tangentfree
