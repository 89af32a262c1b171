#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cec {

enum class Errc {
  Parse,
  SelfLoop,
  OutOfRange,
  InvalidInput,
  NotHypothesis,
  BelowThreshold,
  BipartitionCase,
  ContractViolation,
  InfeasibleTrim,
  Exhausted,
  InsufficientS,
  GreedyStuck,
  ClassificationFailed,
  ProofCaseExhausted,
  BudgetExceeded,
  UnsatisfiableDensity,
  InvalidArcs,
};

std::string_view errc_name(Errc code);

/// Every failing operation in the library throws this; `code()` is the
/// machine-readable part, `what()` carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cec
