#pragma once

#include <stdexcept>
#include <string>

namespace galois_kit {

enum class ErrorKind { law_violation, precondition, budget_exceeded, io };

/// Base of every error thrown by the library. The kind drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A law that a construction must satisfy does not hold.
class LawViolation : public Error {
 public:
  explicit LawViolation(const std::string& what) : Error(ErrorKind::law_violation, what) {}
};

/// Inputs are malformed, mismatched or do not satisfy an operation's precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

/// An exhaustive enumeration would exceed the configured row budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::budget_exceeded, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace galois_kit
