#include "efgc/error.hpp"

namespace efgc {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorKind::kUnsupportedRing: return "UnsupportedRing";
    case ErrorKind::kInvalidRing: return "InvalidRing";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kNotInvertible: return "NotInvertible";
    case ErrorKind::kGroupTooLarge: return "GroupTooLarge";
    case ErrorKind::kGroupMismatch: return "GroupMismatch";
    case ErrorKind::kNotASubgroup: return "NotASubgroup";
    case ErrorKind::kValidationFailed: return "ValidationFailed";
    case ErrorKind::kNonUnitDeterminant: return "NonUnitDeterminant";
    case ErrorKind::kNotAPoint: return "NotAPoint";
    case ErrorKind::kIllegalSubstitution: return "IllegalSubstitution";
    case ErrorKind::kPrecisionExceeded: return "PrecisionExceeded";
    case ErrorKind::kBaseMismatch: return "BaseMismatch";
    case ErrorKind::kNotContained: return "NotContained";
    case ErrorKind::kCutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::kNotNilpotent: return "NotNilpotent";
    case ErrorKind::kOpennessFailed: return "OpennessFailed";
    case ErrorKind::kDegreeMismatch: return "DegreeMismatch";
    case ErrorKind::kNonMonicDenominator: return "NonMonicDenominator";
    case ErrorKind::kNotDivisible: return "NotDivisible";
    case ErrorKind::kExactDivisionFailed: return "ExactDivisionFailed";
    case ErrorKind::kUnsupportedModel: return "UnsupportedModel";
    case ErrorKind::kNotInvertibleOrder: return "NotInvertibleOrder";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kExprError: return "ExprError";
  }
  return "Error";
}

}  // namespace efgc
