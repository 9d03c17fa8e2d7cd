#include "qhol/error.hpp"

namespace qhol {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InvalidQMatrix: return "InvalidQMatrix";
    case ErrorCode::QMatrixMismatch: return "QMatrixMismatch";
    case ErrorCode::NegativeExponentInPolydiskMode: return "NegativeExponentInPolydiskMode";
    case ErrorCode::GeneratorCountMismatch: return "GeneratorCountMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonpositiveRho: return "NonpositiveRho";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::FactorMismatch: return "FactorMismatch";
    case ErrorCode::NonUnivariateFactor: return "NonUnivariateFactor";
    case ErrorCode::IncompatibleSpecs: return "IncompatibleSpecs";
    case ErrorCode::GradingUndefined: return "GradingUndefined";
    case ErrorCode::NonUnimodularGroupMode: return "NonUnimodularGroupMode";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::NegativePowerNotAllowed: return "NegativePowerNotAllowed";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace qhol
