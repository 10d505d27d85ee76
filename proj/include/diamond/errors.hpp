#pragma once

#include <stdexcept>
#include <string>

namespace diamond {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different monomial theories or coefficient fields.
class TheoryMismatch : public Error {
 public:
  using Error::Error;
};

/// A function was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A rule or system violates an ingestion check (order compatibility,
/// uniformity, admission of series rules, ...).
class SystemError : public Error {
 public:
  using Error::Error;
};

/// Raised by orient() and by completion when an element has no unique
/// P-maximal support monomial or is zero.
class OrientationError : public Error {
 public:
  enum class Reason { ZeroElement, MultipleMaxima };

  OrientationError(Reason reason, std::string what)
      : Error(std::move(what)), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// The configured reduction step budget ran out.
class StepBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// ideal_member() on a system that is not known to be confluent.
class NotConfluentSystem : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error in a system file or expression, with a
/// 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace diamond
