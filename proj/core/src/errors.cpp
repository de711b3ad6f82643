#include "foxh/errors.hpp"

namespace foxh {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::PoleOfGamma: return "PoleOfGamma";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::AtPole: return "AtPole";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NotAPole: return "NotAPole";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::SeparationViolated: return "SeparationViolated";
    case ErrorKind::JetPrecisionLoss: return "JetPrecisionLoss";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ContourInvalid: return "ContourInvalid";
    case ErrorKind::SlowDecay: return "SlowDecay";
    case ErrorKind::MultiplePoleEnclosure: return "MultiplePoleEnclosure";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace foxh
