#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hn {

// Base of every exception thrown by the library. `kind()` is a stable,
// machine-readable tag (e.g. "Condition3Violation") used by the CLI when it
// reports diagnostics as JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed textual input (bad rational literal, bad JSON shape, ...).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

// A value that should be a numerical polynomial is not integer-valued.
class NotNumerical : public Error {
 public:
  explicit NotNumerical(const std::string& message) : Error("NotNumerical", message) {}
};

// An internal postcondition that follows from a theorem did not hold.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& message)
      : Error("InvariantViolation", message) {}
};

}  // namespace hn
