#include "qdefect/error.hpp"

#include <utility>

namespace qdefect {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::TowerMismatch: return "TowerMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::WidthMismatch: return "WidthMismatch";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::BadRange: return "BadRange";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotSpanning: return "NotSpanning";
    case Errc::DecompositionInvalid: return "DecompositionInvalid";
    case Errc::SubgeometryCase: return "SubgeometryCase";
    case Errc::DegenerateDual: return "DegenerateDual";
    case Errc::NotGeneratedByIntersection: return "NotGeneratedByIntersection";
    case Errc::HyperplaneWeightTooLarge: return "HyperplaneWeightTooLarge";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DegenerateCode: return "DegenerateCode";
    case Errc::BlockShapeMismatch: return "BlockShapeMismatch";
    case Errc::InconsistentInput: return "InconsistentInput";
    case Errc::BadParams: return "BadParams";
    case Errc::HorizonExceeded: return "HorizonExceeded";
    case Errc::GroundMismatch: return "GroundMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

BudgetError::BudgetError(BigInt required, BigInt budget, const std::string& what)
    : Error(Errc::BudgetExceeded, what), required_(std::move(required)), budget_(std::move(budget)) {}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qdefect
