#pragma once

#include <stdexcept>
#include <string>

namespace spinor {

// Malformed or inconsistent caller input (bad weights, missing data, parse failures).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Evaluation outside the region where a quantity is defined: Gamma poles,
// zeros of a local factor, Euler products left of their abscissa.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace spinor
