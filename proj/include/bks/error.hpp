#pragma once

#include <stdexcept>
#include <string>

namespace bks {

enum class ErrorKind {
  zero_operand,
  not_positive,
  not_an_effect,
  unknown_builtin,
  syntax,
  semantic,
  invalid_ensemble,
  inadmissible_ensemble,
  heavy_no_assignable,
  too_large,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// Syntax/semantic failure in the ensemble text format; locations are 1-based.
class ParseError : public Error {
public:
  ParseError(ErrorKind kind, int line, int column, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + " col " +
                        std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::zero_operand: return "zero-operand";
    case ErrorKind::not_positive: return "not-positive";
    case ErrorKind::not_an_effect: return "not-an-effect";
    case ErrorKind::unknown_builtin: return "unknown-builtin";
    case ErrorKind::syntax: return "syntax-error";
    case ErrorKind::semantic: return "semantic-error";
    case ErrorKind::invalid_ensemble: return "invalid-ensemble";
    case ErrorKind::inadmissible_ensemble: return "inadmissible-ensemble";
    case ErrorKind::heavy_no_assignable: return "heavy-no-assignable";
    case ErrorKind::too_large: return "too-large";
  }
  return "unknown";
}

}  // namespace bks
