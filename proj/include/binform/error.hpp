#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace binform {

enum class ErrorKind {
  DegreeZero,
  ZeroForm,
  NotHomogeneous,
  NotPositiveDefinite,
  NotFiniteOrder,
  ToleranceTooLoose,
  NotRefined,
  UnclassifiableCounts,
  SyntaxError,
  NegativeExponent,
  UnknownIdentifier,
  InvalidArgument,
  BlowUp,
  StepLimit,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Domain errors (bad input, impossible request) vs. usage errors (text that
// does not parse). The CLI maps them to exit codes 1 and 2.
bool is_usage_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt,
        std::vector<int> details = {});

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }
  // Extra integers attached to the error, e.g. the total degrees found in a
  // NotHomogeneous input.
  const std::vector<int>& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
  std::vector<int> details_;
};

}  // namespace binform
