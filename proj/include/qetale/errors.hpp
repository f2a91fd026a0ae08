#pragma once

#include <stdexcept>
#include <string>

namespace qetale {

enum class ErrorKind {
  Domain,
  NotDivisible,
  Parse,
  Precondition,
  NotZeroDimensional,
  GenericFiberInfinite,
  EmptyStratum,
  InvariantViolation,
  ResourceLimit,
  PointNotInStratum,
  MaxDepthExceeded,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Precondition: return "PreconditionError";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::GenericFiberInfinite: return "GenericFiberInfinite";
    case ErrorKind::EmptyStratum: return "EmptyStratum";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::PointNotInStratum: return "PointNotInStratum";
    case ErrorKind::MaxDepthExceeded: return "MaxDepthExceeded";
  }
  return "Error";
}

/// Every failure raised by the library carries a kind so that callers
/// (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(ErrorKind::Parse, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        message_(msg) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qetale
