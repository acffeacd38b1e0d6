#pragma once

#include <stdexcept>
#include <string>

namespace desc {

enum class Err {
  NotAssociative,
  BadIdentity,
  IndexOutOfRange,
  NotAGroup,
  NotClosed,
  DegreeTooLarge,
  NotASymmetricGroup,
  OrderTooLarge,
  AmbientMismatch,
  DomainMismatch,
  NotHomomorphism,
  NotComplement,
  NotInjective,
  NotACocycle,
  SearchBudgetExceeded,
  NotNormal,
  NotSplit,
  NotSchreier,
  NotCentral,
  NotInHomSet,
  HypothesisFailed,
  AxiomViolated,
  ParseError,
  IoError,
};

const char* err_name(Err e);

/// Domain error carrying a machine-checkable code plus a witness message.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw AlgebraError(code, what);
}

}  // namespace desc
