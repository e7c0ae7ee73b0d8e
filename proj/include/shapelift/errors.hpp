#pragma once

#include <stdexcept>
#include <string>

namespace shapelift {

/// Raised when an input violates an operation's precondition (nonpositive
/// parameter, path leaving the reduced quadrant, malformed profile, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a check that the mathematics guarantees turns out false.
/// Seeing one of these means either a bug or a counterexample.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace shapelift
