#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antvote/model.hpp"

namespace antvote::cli {

// Run parameters assembled from (in increasing precedence) built-in
// defaults, a JSON config file, and command-line flags.
struct RunConfig {
  int n = 1001;
  double p_H = 0.6;
  double p_hH = 0.7;
  double p_hL = 0.2;
  double alpha = 0.6;
  std::optional<double> gamma;          // minority split target, if forced
  std::vector<AgentGroup> groups;       // explicit profile, if given
  UtilityTable maj_utility = default_majority_utility();
  UtilityTable min_utility = default_minority_utility();
};

// Parses the JSON config file into `cfg` (fields absent from the file are
// left untouched).  Throws antvote::Error on malformed content.
void apply_config_file(RunConfig& cfg, const std::string& path);

SignalModel config_signal(const RunConfig& cfg);
Prior config_prior(const RunConfig& cfg);

// Environment from the config: explicit groups when present, otherwise the
// (alpha, gamma) targets with default strategies.
Environment config_environment(const RunConfig& cfg, bool strict = true);

}  // namespace antvote::cli
