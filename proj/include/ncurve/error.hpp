#ifndef NCURVE_ERROR_HPP
#define NCURVE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncurve {

enum class ErrorCode {
  DegreeMismatch,
  BothZero,
  UnsupportedField,
  SingularMatrix,
  BadCharacteristic,
  DegenerateInput,
  NonFreeProfile,
  LemmaViolation,
  BadDelta,
  DegreeTooSmall,
  OrderingViolated,
  ResampleExhausted,
  HypothesisViolated,
  AssumptionViolated,
  NotDecreasing,
  Ramified,
  IndexOutOfRange,
  OddK,
  FieldTooLarge,
  DegenerateConic,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ncurve

#endif  // NCURVE_ERROR_HPP
