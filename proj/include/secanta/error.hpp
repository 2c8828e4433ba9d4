#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace secanta {

enum class ErrorCode {
  IndexOutOfRange,
  RepeatedFermionIndex,
  AllZero,
  EmptyOrFullModeSet,
  SpecMismatch,
  DimensionMismatch,
  RankDeficientInjection,
  InvalidSpec,
  SyntaxError,
  LabelLengthMismatch,
  DigitOutOfRange,
  FermionRepeatedDigit,
  DependentFermionVectors,
  ZeroMonomial,
  NotCoprime,
  DegreeMismatch,
  BadParams,
  ZeroParameter,
  InvalidDocument,
};

const char* to_string(ErrorCode code);

// Single exception type for every recoverable failure in the library. The
// code lets callers (and the CLI) dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace secanta
