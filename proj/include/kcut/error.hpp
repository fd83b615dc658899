#pragma once

#include <stdexcept>
#include <string>

namespace kcut {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  MalformedHeader,
  MalformedLine,
  VertexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  EdgeCountMismatch,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& detail)
      : Error(std::string(to_string(kind)) + " (line " + std::to_string(line) + "): " + detail),
        kind_(kind),
        line_(line) {}
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

// An input is valid but outside what an exact routine is configured to handle.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A violated precondition on arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

#define KCUT_CHECK(cond, msg)                                              \
  do {                                                                     \
    if (!(cond)) throw ::kcut::InvariantViolation(std::string(msg));       \
  } while (0)

#define KCUT_REQUIRE(cond, msg)                                            \
  do {                                                                     \
    if (!(cond)) throw ::kcut::PreconditionError(std::string(msg));        \
  } while (0)

}  // namespace kcut
