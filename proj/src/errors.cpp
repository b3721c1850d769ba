#include "tensorlab/errors.hpp"

namespace tensorlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ZeroFactor: return "ZeroFactor";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::TensorTooLarge: return "TensorTooLarge";
    case Errc::LastMode: return "LastMode";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::SpanIsFullSpace: return "SpanIsFullSpace";
    case Errc::BadDimensionRequest: return "BadDimensionRequest";
    case Errc::WrongModeCount: return "WrongModeCount";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::ContradictionDetected: return "ContradictionDetected";
    case Errc::TooManyVectors: return "TooManyVectors";
    case Errc::NonzeroTotalSum: return "NonzeroTotalSum";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::ConditionsViolated: return "ConditionsViolated";
    case Errc::Stalled: return "Stalled";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::RationalsNotEnumerable: return "RationalsNotEnumerable";
    case Errc::RankExceedsBound: return "RankExceedsBound";
    case Errc::WrongRank: return "WrongRank";
    case Errc::NotIndependent: return "NotIndependent";
    case Errc::RationalsRequireProductSpan: return "RationalsRequireProductSpan";
    case Errc::SumsDiffer: return "SumsDiffer";
  }
  return "Unknown";
}

bool is_falsification(Errc code) noexcept {
  return code == Errc::ContradictionDetected || code == Errc::Stalled;
}

}  // namespace tensorlab
