#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indisc {

/// Root of every domain error raised by the toolkit. `kind()` is a stable
/// machine-readable tag used by the CLI error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax_error", message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Malformed or out-of-contract formula (bound variable inside its bound,
/// I predicate in pure arithmetic, arity mismatch, ...).
class FormulaError : public Error {
 public:
  explicit FormulaError(const std::string& message) : Error("formula_error", message) {}
};

class NotACodeError : public Error {
 public:
  explicit NotACodeError(const std::string& message) : Error("not_a_code", message) {}
};

class EvalError : public Error {
 public:
  explicit EvalError(const std::string& message) : Error("eval_error", message) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("domain_error", message) {}
};

}  // namespace indisc
