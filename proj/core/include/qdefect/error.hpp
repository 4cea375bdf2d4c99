#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qdefect/bigint.hpp"

namespace qdefect {

enum class Errc {
  NotPrime,
  BudgetExceeded,
  DivisionByZero,
  TowerMismatch,
  OutOfRange,
  WidthMismatch,
  LevelMismatch,
  BadRange,
  AmbientMismatch,
  NotSpanning,
  DecompositionInvalid,
  SubgeometryCase,
  DegenerateDual,
  NotGeneratedByIntersection,
  HyperplaneWeightTooLarge,
  RankDeficient,
  DegenerateCode,
  BlockShapeMismatch,
  InconsistentInput,
  BadParams,
  HorizonExceeded,
  GroundMismatch,
  ParseError,
};

std::string_view to_string(Errc code);

// Every failure raised by the library. `code` is the machine-readable reason.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  std::string_view reason() const noexcept { return to_string(code_); }

 private:
  Errc code_;
};

// Raised when an enumeration would exceed its budget; carries the exact count.
class BudgetError : public Error {
 public:
  BudgetError(BigInt required, BigInt budget, const std::string& what);

  const BigInt& required() const noexcept { return required_; }
  const BigInt& budget() const noexcept { return budget_; }

 private:
  BigInt required_;
  BigInt budget_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace qdefect
