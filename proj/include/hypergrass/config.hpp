#pragma once

#include <cstdint>
#include <string>

namespace hypergrass {

/// Runtime limits and numeric defaults.  A process-wide instance is read from
/// the JSON file named by the HYPERGRASS_CONFIG environment variable (if set)
/// the first time `config()` is called; all fields may be overridden there.
struct Config {
  int max_n = 24;                      ///< hard cap on the ground set size
  long long max_collections = 500000;  ///< enumeration cap (SizeLimit beyond)
  long long max_subsets = 2000000;     ///< cap on C(n,k) for all-minor ops
  int float_precision_bits = 256;      ///< float mode mantissa bits (>= 64)
  int witness_eps_floor_exp = 40;      ///< epsilon schedule floor 2^-exp
  int default_trials = 100;            ///< sampling trials when unspecified
  std::uint64_t default_seed = 20260815ULL;
  int jobs = 0;                        ///< worker threads; 0 = hardware count

  int effective_jobs() const;
};

/// Mutable process-wide configuration (initialised from HYPERGRASS_CONFIG).
Config& config();

/// Parse a config JSON file into `cfg`; throws error(parameter_mismatch) on
/// malformed content.  Unknown keys are rejected to catch typos.
void load_config_file(const std::string& path, Config& cfg);

}  // namespace hypergrass
