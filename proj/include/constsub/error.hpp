// Error hierarchy shared by every constsub module.
//
// Each failure class maps onto one CLI exit code, so callers that only care
// about the category can catch the base type and read `kind()`.

#ifndef CONSTSUB_ERROR_HPP_
#define CONSTSUB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace constsub {

enum class ErrorKind { Parse, Precondition, Budget, Validation };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed substitution or point literal. Line and column are 1-based;
/// 0 means "not applicable" (e.g. JSON input).
class ParseError : public Error {
 public:
  ParseError(std::string const& msg, std::size_t line = 0, std::size_t column = 0)
      : Error(ErrorKind::Parse, format(msg, line, column)),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::string const& msg, std::size_t line,
                            std::size_t column) {
    if (line == 0) {
      return msg;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An operation was called on an input outside its domain (non-primitive,
/// variable length, finite subshift, not one-to-one, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(std::string const& msg)
      : Error(ErrorKind::Precondition, msg) {}
};

/// A configured budget (word length, search nodes, horizon) was exceeded.
/// Never a silent truncation.
class BudgetError : public Error {
 public:
  explicit BudgetError(std::string const& msg) : Error(ErrorKind::Budget, msg) {}
};

/// Inconsistent constructive data, e.g. a desubstitution chain that breaks.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::string const& msg)
      : Error(ErrorKind::Validation, msg) {}
};

}  // namespace constsub

#endif  // CONSTSUB_ERROR_HPP_
