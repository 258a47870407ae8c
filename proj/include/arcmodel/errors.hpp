/* Error taxonomy shared by all modules. Every failure carries a machine
   readable code so the CLI can map it to an exit class. */

#pragma once

#include <stdexcept>
#include <string>

namespace arcmodel {

enum class ErrorCode {
  // input / schema class
  SyntaxError,
  UnknownVariable,
  DivisionByZeroCoefficient,
  SchemaError,
  // mathematical precondition class
  DomainMismatch,
  NotSquare,
  NotNilpotent,
  ResidueOrderUndetectable,
  PrecisionExhausted,
  NotOnStratum,
  NoFiniteMinor,
  PointNotOnVariety,
  MissingComponentData,
  EmptyVariety,
  // resource class
  ResourceLimit,
  // bug traps
  BoundViolated,
  DefectNotContracting,
  Internal,
};

const char* error_code_name(ErrorCode c);

// Exit class used by the CLI: 2 = input, 3 = math precondition,
// 4 = resource, 5 = bug trap.
int error_exit_code(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string location = {})
      : std::runtime_error(format(code, message, location)),
        code_(code),
        message_(std::move(message)),
        location_(std::move(location)) {}

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }
  const std::string& location() const { return location_; }

 private:
  static std::string format(ErrorCode code, const std::string& msg,
                            const std::string& loc);

  ErrorCode code_;
  std::string message_;
  std::string location_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message,
                              std::string location = {}) {
  throw Error(code, std::move(message), std::move(location));
}

inline void require(bool cond, ErrorCode code, const std::string& message,
                    const std::string& location = {}) {
  if (!cond) fail(code, message, location);
}

}  // namespace arcmodel
