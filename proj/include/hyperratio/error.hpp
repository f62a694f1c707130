#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperratio {

enum class ErrorCode {
  Domain,
  DivisionContainsZero,
  NegativeSqrt,
  NotConverged,
  NoConvergence,
  TailSeedInvalid,
  SignViolation,
  ArccosRange,
  DenominatorNonpositive,
  NonpositiveC,
  RadicandNegative,
  SignConditionFailed,
  Inconclusive,
  Discriminant,
  ShrinkWindow,
  Overprecision,
  UnknownId,
  Config,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const char* what) {
  if (!condition) fail(code, what);
}

}  // namespace hyperratio
