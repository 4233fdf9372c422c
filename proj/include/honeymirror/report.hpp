#pragma once

#include <stdexcept>
#include <string>

#include "honeymirror/mirror.hpp"

namespace hm {

inline constexpr const char* kSchema = "honeymirror/1";

struct RunConfig {
  std::string command;
  int n = 2;
  int radius = 2;
  int twist_radius = 1;
  int degree_cap = 64;
  std::string format = "json";
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError when the configuration is out of range for its command.
void validate_config(const RunConfig& config);

struct Report {
  std::string json;  // pretty-printed, keys sorted, trailing newline
  Verdict verdict = Verdict::Inconclusive;
};

Report build_report(const RunConfig& config);
Report arboreal_report(const RunConfig& config);
Report aside_report(const RunConfig& config);
Report bside_report(const RunConfig& config);
Report acyclic_report(const RunConfig& config);
Report mirror_report(const RunConfig& config);
/// Dispatches on config.command after validation.
Report run_report(const RunConfig& config);

/// Wavefront OBJ of the window: edges as `l` lines for n = 2, two-faces as `f` lines for n = 3.
std::string window_obj(int n, int radius);

}  // namespace hm
