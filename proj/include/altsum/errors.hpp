#pragma once

#include <stdexcept>
#include <string>

namespace altsum {

/// Input outside the mathematical domain of an operation
/// (reciprocal of a vanishing value, zeta at s <= 1, divergent product, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Request exceeds a configured size limit (sieve cap, series length).
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// A checked theorem failed on computed data. Never expected to fire.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace altsum
