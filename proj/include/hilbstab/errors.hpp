#pragma once

#include <exception>
#include <stdexcept>
#include <string>

namespace hilbstab {

// Bad input or a cap that was exceeded. CLI exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CapExceeded : UsageError {
  using UsageError::UsageError;
};

// Slope on a wall, or generator values that hit a lattice. CLI exit code 3.
struct NonGeneric : std::domain_error {
  using std::domain_error::domain_error;
};

// A pole in a restriction that did not cancel. CLI exit code 4.
struct ResidualPole : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A tree factor with no partner in the numerator; indicates a broken term list.
struct CancellationMiss : std::logic_error {
  using std::logic_error::logic_error;
};

// 2 usage, 3 non-generic, 4 residual pole, 1 anything else.
inline int exit_code(const std::exception& e) {
  if (dynamic_cast<const NonGeneric*>(&e)) return 3;
  if (dynamic_cast<const ResidualPole*>(&e)) return 4;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return 2;
  return 1;
}

}  // namespace hilbstab
