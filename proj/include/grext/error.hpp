#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grext {

enum class ErrorKind {
  ShapeMismatch,
  Parse,
  NonAssociative,
  UnitMismatch,
  GradingViolation,
  IdempotentFault,
  NotPrimitive,
  PrimeTooSmall,
  TrivialGrading,
  NotIdempotent,
  IndexOutOfRange,
  AlgebraMismatch,
  ActionFault,
  ZeroBimodule,
  NotAutomorphism,
  NotBasic,
  NotSelfInjective,
  AmbiguousMatch,
  PreconditionFailed,
  GeneratorNotFound,
  CheckFailed,
  Unsupported,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type. `witness` carries the
// offending index or name when the failing condition has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<std::string> witness = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::optional<std::string> witness_;
};

}  // namespace grext
