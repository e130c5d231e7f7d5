#pragma once

#include <stdexcept>
#include <string>

namespace qha {

// Invalid model parameters, unknown options, malformed input files.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two operands built on different phase-space models.
class ModelMismatch : public std::invalid_argument {
 public:
  ModelMismatch() : std::invalid_argument("operands live on different phase-space models") {}
};

// A precondition on the mathematical input failed (non-Hermitian, not a density, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qha
