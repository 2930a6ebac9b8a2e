#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skc {

enum class ErrorKind {
  Syntax,
  UnknownSugar,
  DuplicateDef,
  UndefinedHandler,
  FutureInSource,
  FutureInStoredBody,
  Undefined,
  NotAValue,
  BuiltinCollision,
  EventCollision,
  StaleRedex,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Error raised while reading surface syntax; carries a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, const std::string& message, std::size_t line, std::size_t column)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace skc
