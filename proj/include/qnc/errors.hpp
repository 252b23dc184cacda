#pragma once

#include <stdexcept>
#include <string>

namespace qnc {

// Argument outside the mathematical domain (x <= 1 for F, T too small, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds a configured resource cap (matrix dimension, prime count).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical procedure failed to converge within its budget.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  long line() const noexcept { return line_; }

 private:
  long line_;
};

// Input parsed but violates a documented invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qnc
