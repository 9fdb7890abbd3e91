#include "compositum/error.hpp"

namespace compositum {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotAProperSubgroup: return "NotAProperSubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorKind::InvalidQuintuple: return "InvalidQuintuple";
    case ErrorKind::NotIntermediate: return "NotIntermediate";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::FieldNotTotallyReal: return "FieldNotTotallyReal";
    case ErrorKind::NotTotallyPositive: return "NotTotallyPositive";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::GramMismatch: return "GramMismatch";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::NeedTwoElements: return "NeedTwoElements";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace compositum
