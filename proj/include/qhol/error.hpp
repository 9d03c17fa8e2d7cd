#ifndef QHOL_ERROR_HPP
#define QHOL_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qhol {

enum class ErrorCode {
  NegativeExponent,
  LengthMismatch,
  IndexOutOfRange,
  CapExceeded,
  NotApplicable,
  InvalidQMatrix,
  QMatrixMismatch,
  NegativeExponentInPolydiskMode,
  GeneratorCountMismatch,
  DimensionMismatch,
  ArityMismatch,
  NonpositiveRho,
  BadParams,
  FactorMismatch,
  NonUnivariateFactor,
  IncompatibleSpecs,
  GradingUndefined,
  NonUnimodularGroupMode,
  SyntaxError,
  UnknownGenerator,
  NegativePowerNotAllowed,
  ModeMismatch,
  FormatError,
  NotInvertible,
  TooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. Parser failures carry the byte
/// offset at which they were detected.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(what), code_(code), offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace qhol

#endif
