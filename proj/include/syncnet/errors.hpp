#ifndef SYNCNET_ERRORS_HPP
#define SYNCNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syncnet {

// Every failure mode the library reports maps to one of these codes so the
// CLI can print a named diagnostic and pick the right exit code.
enum class ErrorCode {
  CycleDetected,
  UnreachableAgent,
  InvalidWeight,
  SelfLoop,
  IndexOutOfRange,
  ZeroTau,
  DimensionMismatch,
  NotHurwitz,
  NotPositiveDefinite,
  SolveFailed,
  SingularAm,
  NoNeighbors,
  SignConditionViolated,
  NonFiniteState,
  Diverged,
  ParseError,
  InvalidScenario,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace syncnet

#endif  // SYNCNET_ERRORS_HPP
