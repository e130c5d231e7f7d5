#pragma once

// Command-line front end. Exit codes: 0 success, 1 identity or inequality
// violation, 2 usage error, 3 mathematical infeasibility (zero set).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qha/phasespace.hpp"

namespace qha::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kInfeasible = 3 };

struct ScenarioConfig {
  ModelKind kind = ModelKind::FiniteCyclic;
  // Either a single dimension "8" or an inclusive range "2..16" (verify only).
  std::string n = "8";
  std::optional<double> length;
  PhaseConvention convention = PhaseConvention::Standard;
  std::uint64_t seed = 1;
  int seeds = 20;
  std::string suite = "all";
  std::string window = "random_density";
  int window_rank = 1;
  std::string state = "random_density";
  std::string mode = "pseudo";
  std::optional<double> tol;
  std::optional<double> radius;
  std::string phi = "exp";
  double beta = 1.0;
  double p = 2.0;
  int trials = 50;
  std::string variant = "both";
  std::string output;
  std::string format = "json";
};

// Applies the keys of a scenario file; unknown keys and ill-typed values throw ConfigError.
void apply_config_json(const nlohmann::json& j, ScenarioConfig& config);

// Parses "8" or "2..16"; throws ConfigError.
std::vector<int> parse_n_range(const std::string& text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qha::cli
