#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zigzag {

/// Raised when an input violates a documented precondition (bad file, wrong
/// bit count, non-homogeneous orientation where one is required, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A malformed record in one of the text formats.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Internal consistency failure. These guard statements that are theorems
/// about zigzags; seeing one means a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zigzag
