#ifndef TENSORLAB_ERRORS_HPP
#define TENSORLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tensorlab {

enum class Errc {
  ParseError,
  SchemaError,
  UnsupportedField,
  InvalidArgument,
  ZeroFactor,
  IndexOutOfRange,
  SignatureMismatch,
  TensorTooLarge,
  LastMode,
  DivisionByZero,
  SpanIsFullSpace,
  BadDimensionRequest,
  WrongModeCount,
  PreconditionFailed,
  ContradictionDetected,
  TooManyVectors,
  NonzeroTotalSum,
  NotAPartition,
  ConditionsViolated,
  Stalled,
  BudgetExceeded,
  RationalsNotEnumerable,
  RankExceedsBound,
  WrongRank,
  NotIndependent,
  RationalsRequireProductSpan,
  SumsDiffer,
};

std::string_view to_string(Errc code) noexcept;

/// True for error codes that signal a falsified theorem rather than bad input.
bool is_falsification(Errc code) noexcept;

/// Single exception type for the library. `location` points at the offending
/// piece of input when there is one (e.g. "vectors[2][1]").
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string location = {})
      : std::runtime_error(message), code_(code), location_(std::move(location)) {}

  Errc code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  Errc code_;
  std::string location_;
};

}  // namespace tensorlab

#endif  // TENSORLAB_ERRORS_HPP
