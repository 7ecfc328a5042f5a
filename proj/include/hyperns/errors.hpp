#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyperns {

// Error categories, mapped to CLI exit codes: Parse -> 2, everything else -> 3.
enum class ErrorKind {
  Parse,         // malformed input text
  Budget,        // exhaustive scan would exceed the configured budget
  Precondition,  // an operation's stated precondition fails
  Soundness,     // an oracle's answer failed re-verification
  Input,         // invalid data fed to an operation (non-monotone sequence, ...)
  Shape,         // statement shape not covered by the transfer predicate
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(std::string msg, std::size_t line, std::size_t column)
      : Error(ErrorKind::Parse,
              msg + " (line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ")"),
        line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

class BudgetError : public Error {
public:
  explicit BudgetError(std::string msg) : Error(ErrorKind::Budget, std::move(msg)) {}
};

class PreconditionError : public Error {
public:
  explicit PreconditionError(std::string msg)
      : Error(ErrorKind::Precondition, std::move(msg)) {}
};

class SoundnessError : public Error {
public:
  explicit SoundnessError(std::string msg)
      : Error(ErrorKind::Soundness, std::move(msg)) {}
};

class InputError : public Error {
public:
  explicit InputError(std::string msg) : Error(ErrorKind::Input, std::move(msg)) {}
};

class ShapeError : public Error {
public:
  explicit ShapeError(std::string msg) : Error(ErrorKind::Shape, std::move(msg)) {}
};

}  // namespace hyperns
