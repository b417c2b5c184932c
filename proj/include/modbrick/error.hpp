#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modbrick {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  InvalidModulus,
  FieldTooLarge,
  DimensionMismatch,
  NotAPermutation,
  OrderCapExceeded,
  NotASubgroup,
  NotNormal,
  NotInvertible,
  NotAHomomorphism,
  GroupMismatch,
  FieldMismatch,
  ConjugationLeavesSubgroup,
  Indeterminate,
  EnumCapExceeded,
  HypothesisNotVerified,
  IndexNotPPower,
  IndexDivisibleByP,
  NotARetraction,
  NotGInvariantModule,
  NotABrick,
  NotASemibrick,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` drives CLI exit codes:
/// Indeterminate-like kinds map to 2, input errors to 3.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for outcomes that mean "the search ran out of budget", not "no".
  bool is_indeterminate() const noexcept {
    return kind_ == ErrorKind::Indeterminate || kind_ == ErrorKind::EnumCapExceeded ||
           kind_ == ErrorKind::HypothesisNotVerified;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace modbrick
