#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qzm {

/// Bad numeric parameter (h < 3, n < 2, index out of range, inadmissible diagram).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arithmetic outside the domain of an operation (division by zero).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Misuse of the API: mixing fields, chiralities, or unsupported parameters.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The vacuum collapsed in the constructed quotient; the relation set is inconsistent.
class RelationSetInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear-algebra block exceeds the configured size ceiling.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t size, std::size_t budget)
      : std::runtime_error(what + " (size " + std::to_string(size) + " > budget " +
                           std::to_string(budget) + ")"),
        size_(size),
        budget_(budget) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t size_;
  std::size_t budget_;
};

}  // namespace qzm
