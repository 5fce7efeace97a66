#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when a rational function has no finite value at t = 0.
class PoleAtZero : public std::domain_error {
 public:
  explicit PoleAtZero(int valuation)
      : std::domain_error("pole at t=0 of order " + std::to_string(-valuation)),
        valuation_(valuation) {}

  int valuation() const noexcept { return valuation_; }

 private:
  int valuation_;
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parse failure with a 1-based position in the input text (line 0 means
/// the location is given by `where` instead, e.g. a JSON path).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column,
             std::string where = {})
      : std::runtime_error(format(msg, line, column, where)),
        line_(line),
        column_(column),
        where_(std::move(where)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& where() const noexcept { return where_; }

 private:
  static std::string format(const std::string& msg, std::size_t line,
                            std::size_t column, const std::string& where) {
    if (line > 0)
      return "line " + std::to_string(line) + ", column " +
             std::to_string(column) + ": " + msg;
    if (!where.empty()) return where + ": " + msg;
    return msg;
  }

  std::size_t line_;
  std::size_t column_;
  std::string where_;
};

}  // namespace leibniz
