#pragma once
#include <stdexcept>
#include <string>

namespace lattika {

enum class ErrorCode {
  NonIntegerN,
  NoReduction,
  OracleAccuracy,
  UnsupportedN,
  UnknownTag,
  NoSubstitution,
  IndexOutsideCone,
  NegativeBracket,
  SampleCountMismatch,
  NotMultipleOf3,
  IndexOutOfRange,
  Overflow,
  Parse,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& what)
      : std::runtime_error(std::string(error_name(c)) + ": " + what), code_(c) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lattika
