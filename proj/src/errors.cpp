#include "desc/errors.hpp"

namespace desc {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotAssociative: return "NotAssociative";
    case Err::BadIdentity: return "BadIdentity";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::NotAGroup: return "NotAGroup";
    case Err::NotClosed: return "NotClosed";
    case Err::DegreeTooLarge: return "DegreeTooLarge";
    case Err::NotASymmetricGroup: return "NotASymmetricGroup";
    case Err::OrderTooLarge: return "OrderTooLarge";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::DomainMismatch: return "DomainMismatch";
    case Err::NotHomomorphism: return "NotHomomorphism";
    case Err::NotComplement: return "NotComplement";
    case Err::NotInjective: return "NotInjective";
    case Err::NotACocycle: return "NotACocycle";
    case Err::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Err::NotNormal: return "NotNormal";
    case Err::NotSplit: return "NotSplit";
    case Err::NotSchreier: return "NotSchreier";
    case Err::NotCentral: return "NotCentral";
    case Err::NotInHomSet: return "NotInHomSet";
    case Err::HypothesisFailed: return "HypothesisFailed";
    case Err::AxiomViolated: return "AxiomViolated";
    case Err::ParseError: return "ParseError";
    case Err::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace desc
