#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssg/solitons.hpp"

namespace ssg {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double xmin = -1.0;
  double xmax = 1.0;
  int nx = 1;
  double tmin = -1.0;
  double tmax = 1.0;
  int nt = 1;
};

// One run description, ingested from a JSON document. Soliton generator
// indices are assigned in list order (the thetas occupy 0 and 1).
struct RunConfig {
  std::vector<SolitonParams> solitons;
  GridSpec grid;
  // 0 keeps the per-check defaults; a positive value overrides every check.
  double tolerance = 0.0;
  std::uint64_t seed = 1;
  double singular_margin = 1e-3;
  int samples = 50;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
void validate_config(const RunConfig& c);

Window config_window(const RunConfig& c);
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace ssg
