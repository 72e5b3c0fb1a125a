#ifndef DCLPC_ERRORS_HPP_
#define DCLPC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dclpc {

/// Malformed formula, program, or model text. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + message;
  }

  std::string message_;
  int line_;
  int column_;
};

/// A formula, program, or model mentions an identifier outside the signature
/// it is evaluated over, or two models over different signatures are mixed.
class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured size budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dclpc

#endif  // DCLPC_ERRORS_HPP_
