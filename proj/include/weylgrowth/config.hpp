#pragma once

// Run configuration: defaults, an optional JSON file named by WEYLGROWTH_CONFIG,
// then command-line overrides.

#include "weylgrowth/critical.hpp"

#include <cstdint>
#include <string>

namespace weylgrowth {

struct Config {
  double tolerance = 1e-9;
  int max_iter = 10000;
  std::uint64_t seed = 0;
  int multi_start = 32;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  std::size_t dd_rank_cap = kDefaultRankCap;
  std::size_t orbit_cap = 1000000;
};

/// Unknown keys and wrong types are InputError.
Config load_config(const std::string& path);
/// load_config on $WEYLGROWTH_CONFIG, or the defaults when it is unset or empty.
Config config_from_env();

SolverConfig solver_config(const Config& c);

}  // namespace weylgrowth
