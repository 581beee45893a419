#include "binform/error.hpp"

namespace binform {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorKind::ToleranceTooLoose: return "ToleranceTooLoose";
    case ErrorKind::NotRefined: return "NotRefined";
    case ErrorKind::UnclassifiableCounts: return "UnclassifiableCounts";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BlowUp: return "BlowUp";
    case ErrorKind::StepLimit: return "StepLimit";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_usage_error(ErrorKind kind) {
  return kind == ErrorKind::SyntaxError || kind == ErrorKind::NegativeExponent ||
         kind == ErrorKind::UnknownIdentifier || kind == ErrorKind::InvalidArgument;
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> offset, std::vector<int> details)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      offset_(offset),
      details_(std::move(details)) {}

}  // namespace binform
