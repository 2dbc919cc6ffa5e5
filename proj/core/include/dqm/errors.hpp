#pragma once

#include <stdexcept>
#include <string>

namespace dqm {

/// Two operands that must share a dimension (or lattice spacing) do not.
class SizeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace dqm
