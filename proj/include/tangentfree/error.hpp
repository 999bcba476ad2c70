#pragma once

#include <stdexcept>
#include <string>

namespace tangentfree {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  FieldTooLarge,
  DivisionByZero,
  IdenticalPoints,
  IdenticalLines,
  ZeroVector,
  DegenerateConic,
  OddOrderRequired,
  TooFewPoints,
  PointsOnInfinity,
  WrongSize,
  SizeMismatch,
  InvalidA,
  QTooSmall,
  RTooLarge,
  NotExterior,
  NotExternal,
  CapTooSmall,
  TooLarge,
  Infeasible,
  GroupTooLarge,
  PrimeField,
  TimeBudgetExceeded,
  NotCodeword,
  InvalidArgument,
  Format,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// command-line front end can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tangentfree
