#pragma once

// Seeded numerical checks of the convolution and Fourier identities.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qha/phasespace.hpp"

namespace qha {

struct VerificationReport {
  std::string identity_name;
  std::string model_kind;
  int n = 0;
  std::uint64_t seed = 0;
  std::string inputs_digest;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;
};

// Absolute tolerance per unit of input scale.
inline constexpr double kIdentityTolerance = 1e-10;

const std::vector<std::string>& registered_identities();
bool is_registered_identity(std::string_view name);

// Draws seeded random inputs, evaluates both sides and compares them against
// 1e-10 times the product of the trace/L1 norms of the inputs involved.
// Throws ConfigError for an unknown identity name.
VerificationReport verify_identity(std::string_view name, std::uint64_t seed, const PhaseSpaceModel& model);
VerificationReport verify_identity(std::string_view name, std::uint64_t seed, int n);

}  // namespace qha
