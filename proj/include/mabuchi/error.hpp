#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mabuchi {

// Numeric values are mirrored by mabuchi_status in mabuchi.h.
enum class ErrorCode {
  InvalidArgument = 1,
  ParseError = 2,
  NotFano = 3,
  NotDivisible = 4,
  InvariantViolation = 5,
  UnsupportedWeight = 6,
  NotPositive = 7,
  FutakiNonzero = 8,
  BracketFailure = 9,
  OracleMismatch = 10,
  VerdictMismatch = 11,
  IoError = 12,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Whether an error is caused by the caller's input (as opposed to a broken
/// internal invariant, which indicates a bug or a precision misconfiguration).
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace mabuchi
