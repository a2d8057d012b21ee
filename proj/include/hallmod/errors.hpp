#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hallmod {

struct InvalidField : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("singular matrix") {}
};

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown when an enumeration would exceed the configured size limit.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& what, std::uint64_t count)
      : std::runtime_error("enumeration budget exceeded: " + what + " needs " +
                           std::to_string(count)),
        count(count) {}
  std::uint64_t count;
};

}  // namespace hallmod
