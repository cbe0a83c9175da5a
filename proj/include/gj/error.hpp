#pragma once

#include <stdexcept>
#include <string>

namespace gj {

enum class ErrorKind {
  Zero,
  Singular,
  NoRecurrence,
  BudgetExceeded,
  LevelUncertified,
  NoStabilization,
  InfiniteLowerSupport,
  ZeroArgument,
  ZeroDenominator,
  AllDegenerate,
  SingularPoint,
  ToleranceNotMet,
  NearZeroDenominator,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

/// Engine failure carrying a machine-readable kind. Stabilization and budget
/// failures are engineering limits and surface as INCONCLUSIVE verdicts.
class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  bool inconclusive() const noexcept {
    return kind_ == ErrorKind::NoStabilization || kind_ == ErrorKind::BudgetExceeded ||
           kind_ == ErrorKind::NoRecurrence || kind_ == ErrorKind::InfiniteLowerSupport ||
           kind_ == ErrorKind::ToleranceNotMet;
  }

 private:
  ErrorKind kind_;
};

}  // namespace gj
