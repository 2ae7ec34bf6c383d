#include "mabuchi/error.hpp"

namespace mabuchi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotFano: return "NotFano";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::UnsupportedWeight: return "UnsupportedWeight";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::FutakiNonzero: return "FutakiNonzero";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::VerdictMismatch: return "VerdictMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
    case ErrorCode::NotFano:
    case ErrorCode::UnsupportedWeight:
    case ErrorCode::NotPositive:
    case ErrorCode::FutakiNonzero:
    case ErrorCode::IoError:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

}  // namespace mabuchi
