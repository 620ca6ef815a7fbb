#pragma once

#include <stdexcept>
#include <string>

namespace qiv {

// Every failure mode the engine can report.  Verification harness code maps
// these to skipped(reason) verdicts; tests assert on specific kinds.
enum class Err {
  DivisionByZeroSeries,
  OrderExceeded,
  PochInfiniteZero,
  InadmissibleSeries,
  PoleInTerm,
  NotAPerfectSquare,
  TerminationRequired,
  NoConvergence,
  NonFinite,
  ConstraintViolation,
  NoAdmissibleSample,
  BadInput,
};

const char* err_name(Err e);

class EngineError : public std::runtime_error {
 public:
  EngineError(Err kind, const std::string& what)
      : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void raise(Err kind, const std::string& what) {
  throw EngineError(kind, what);
}

}  // namespace qiv
