#pragma once

#include <stdexcept>
#include <string>

namespace conjugate {

// Base of every error raised by the library. The CLI maps these to exit
// status 1 and a structured error report.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Out-of-range or malformed argument (non-positive scale, bad grid, ...).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& message) : Error("parameter", message) {}
};

// Input that is well formed but carries no information to analyse,
// e.g. a zero-energy signal passed to a moment computation.
class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(const std::string& message) : Error("degenerate_input", message) {}
};

// Argument outside the mathematical domain of a formula (ln n at n = 1).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("domain", message) {}
};

// Request exceeds an explicit runtime guard.
class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& message) : Error("size_limit", message) {}
};

}  // namespace conjugate
