#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace largeness {

enum class ErrorCode {
  ZeroOrdinal,
  NonCanonical,
  ParseError,
  NotInCarrier,
  EmptySet,
  OverlappingBlocks,
  PreconditionViolated,
  NotLargeEnough,
  BadStar,
  MinTooSmall,
  NotSubset,
  WrongArity,
  NotTransitive,
  Unsupported,
  InfeasibleScale,
  BudgetExceeded,
  CertificationFailed,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroOrdinal: return "ZeroOrdinal";
    case ErrorCode::NonCanonical: return "NonCanonical";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotInCarrier: return "NotInCarrier";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotLargeEnough: return "NotLargeEnough";
    case ErrorCode::BadStar: return "BadStar";
    case ErrorCode::MinTooSmall: return "MinTooSmall";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InfeasibleScale: return "InfeasibleScale";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
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

/// Parse failures also remember the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

/// Postcondition of a witness producer: failure means a bug, not bad input.
inline void certify(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::CertificationFailed, what);
}

}  // namespace largeness
