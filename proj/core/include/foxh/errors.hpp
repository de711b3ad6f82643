#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foxh {

enum class ErrorKind {
  // parameter model
  OrderViolation,
  NonPositiveWeight,
  LengthMismatch,
  ZeroArgument,
  // gamma kernel
  PoleOfGamma,
  DomainError,
  AtPole,
  // jets
  ShapeMismatch,
  ZeroConstantTerm,
  NotAPole,
  // series
  NotSimple,
  SeparationViolated,
  JetPrecisionLoss,
  EmptyFamily,
  NotInDomain,
  NoConvergence,
  // oracles
  ContourInvalid,
  SlowDecay,
  MultiplePoleEnclosure,
  NonConvergent,
  // reductions
  UnknownCase,
  OutOfDomain,
  // input handling
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind;
/// the CLI maps it to a structured JSON error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace foxh
