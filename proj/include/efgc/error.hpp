#pragma once

#include <stdexcept>
#include <string>

namespace efgc {

enum class ErrorKind {
  kDimensionMismatch,
  kNonUnitLeadingCoefficient,
  kUnsupportedRing,
  kInvalidRing,
  kDivisionByZero,
  kNotInvertible,
  kGroupTooLarge,
  kGroupMismatch,
  kNotASubgroup,
  kValidationFailed,
  kNonUnitDeterminant,
  kNotAPoint,
  kIllegalSubstitution,
  kPrecisionExceeded,
  kBaseMismatch,
  kNotContained,
  kCutoffTooSmall,
  kNotNilpotent,
  kOpennessFailed,
  kDegreeMismatch,
  kNonMonicDenominator,
  kNotDivisible,
  kExactDivisionFailed,
  kUnsupportedModel,
  kNotInvertibleOrder,
  kParseError,
  kExprError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, long detail = -1)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const { return kind_; }
  // Command-specific integer payload; for IllegalSubstitution it is the
  // smallest power j with f(image)^j = 0 that was found, or -1.
  long detail() const { return detail_; }

 private:
  ErrorKind kind_;
  long detail_;
};

}  // namespace efgc
