#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lincomp {

enum class ErrorCode {
  InvalidArgument,
  NonPrime,
  ReducibleModulus,
  DegreeMismatch,
  InvalidModulus,
  FieldTooLarge,
  ZeroInverse,
  MixedFields,
  ElementOutOfRange,
  NotADivisor,
  NotCoprime,
  ZeroElement,
  DivideByZeroPoly,
  BothZero,
  ZeroScale,
  EmptyPeriod,
  BadConnectionPoly,
  EmptyPrefix,
  WrongCharacteristic,
  BadLength,
  NotPrimePowerPeriod,
  PeriodMismatch,
  ArityMismatch,
  AlgorithmInapplicable,
  SyntaxError,
  BadHeader,
  BadConfig,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::DivideByZeroPoly: return "DivideByZeroPoly";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::EmptyPeriod: return "EmptyPeriod";
    case ErrorCode::BadConnectionPoly: return "BadConnectionPoly";
    case ErrorCode::EmptyPrefix: return "EmptyPrefix";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::NotPrimePowerPeriod: return "NotPrimePowerPeriod";
    case ErrorCode::PeriodMismatch: return "PeriodMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::AlgorithmInapplicable: return "AlgorithmInapplicable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input-file failure; line is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lincomp
