#pragma once

#include <stdexcept>
#include <string>

namespace bipmatch {

// Base for every error raised by the library. The C API maps each subclass
// onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  MissingHeader,
  MalformedHeader,
  MalformedLine,
  UnknownVertex,
  IntraClassEdge,
  DuplicateEdge,
  CountMismatch,
  NotAnEdge,
  SharedVertex,
  Loop,
};

// Malformed text input. `line` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        kind_(kind),
        line_(line) {}
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Bad vertex ids, wrong terminal classes and similar caller mistakes.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The input is well formed but violates an operation's precondition
// (no perfect matching, not matching covered, not a brace, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine refused an input that exceeds its size guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A structural fact the algorithms rely on did not hold. Should never fire;
// when it does the result must be compared against the oracle.
class StructuralAnomaly : public Error {
 public:
  using Error::Error;
};

}  // namespace bipmatch
