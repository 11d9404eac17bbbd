#pragma once

#include <string>
#include <vector>

#include "ssg/config.hpp"

namespace ssg {

struct CheckResult {
  std::string name;
  std::string relation;  // the measured identity, spelled out
  double max_residual = 0.0;
  double tolerance = 0.0;
  int points = 0;
  int rejected = 0;
  bool pass = false;
};

struct ResidualReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Test hooks: fault injection for exercising the failure paths.
struct VerifyHooks {
  double delta_offset = 0.0;  // added to delta inside the closure identity
};

// Runs one of the residual suites {eom, bt, perm, identities, lattice, all}
// for the configured solitons. Deterministic for a fixed config. Throws
// ConfigError for an unknown suite or one the config cannot support.
ResidualReport run_suite(const RunConfig& config, const std::string& which,
                         const VerifyHooks& hooks = {},
                         ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace ssg
