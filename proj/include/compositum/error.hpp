#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compositum {

enum class ErrorKind {
  CapExceeded,
  InvalidPermutation,
  NotASubgroup,
  NotAProperSubgroup,
  NotNormal,
  NotPrime,
  PrimeDoesNotDivideOrder,
  InvalidQuintuple,
  NotIntermediate,
  InvalidWitness,
  PreconditionFailed,
  ConstantPolynomial,
  NotIrreducible,
  WrongArity,
  FieldMismatch,
  FieldNotTotallyReal,
  NotTotallyPositive,
  NotPositiveDefinite,
  GramMismatch,
  BadDegree,
  NeedTwoElements,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this one exception type; the
/// kind is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace compositum
