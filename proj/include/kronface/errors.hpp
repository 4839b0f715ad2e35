#pragma once

#include <stdexcept>
#include <string>

namespace kronface {

/// Raised when an argument lies outside the domain of an operation
/// (malformed partition, out-of-range cell, size mismatch, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal invariant fails: a character sum that does not
/// divide evenly, a theorem-guaranteed pair failing its dominance test, etc.
/// These indicate a bug, never bad input.
class InternalConsistencyError : public std::logic_error {
 public:
  explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kronface
