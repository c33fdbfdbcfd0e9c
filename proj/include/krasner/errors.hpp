#ifndef KRASNER_ERRORS_HPP
#define KRASNER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace krasner {

// Caller broke a documented precondition (bad arguments, malformed input).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured budget was exceeded; the message names the bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Indicates a kernel bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Structure-document parse failure with a position when one is known.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& msg, int line = -1, int column = -1)
      : UsageError(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line < 0) return msg;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
  }

  int line_;
  int column_;
};

}  // namespace krasner

#endif  // KRASNER_ERRORS_HPP
