#pragma once

#include <stdexcept>
#include <string>

namespace lsync {

enum class ErrorKind {
  SymbolNotInAlphabet,
  BudgetExceeded,
  Validation,
  ClassResolutionFailure,
  GraphNotLeftResolving,
  QuotientBreaksLeftResolving,
  LevelRangeMismatch,
  NotWellDefined,
  NotIrreducible,
  UndeterminedTower,
  Domain,
  SymbolCollision,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lsync
