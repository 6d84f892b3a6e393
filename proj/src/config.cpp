#include "hypergrass/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <thread>

#include "hypergrass/errors.hpp"
#include "json.hpp"

namespace hypergrass {

const char* errc_name(errc c) {
  switch (c) {
    case errc::parameter_mismatch:       return "ParameterMismatch";
    case errc::size_limit:               return "SizeLimit";
    case errc::no_circuit:               return "NoCircuit";
    case errc::not_sorted:               return "NotSorted";
    case errc::not_maximal:              return "NotMaximal";
    case errc::not_adjacent:             return "NotAdjacent";
    case errc::degenerate_query:         return "DegenerateQuery";
    case errc::singular_incidence:       return "SingularIncidence";
    case errc::precision_failure:        return "PrecisionFailure";
    case errc::witness_search_exhausted: return "WitnessSearchExhausted";
    case errc::lemma_violation:          return "LemmaViolation";
    case errc::not_applicable:           return "NotApplicable";
    case errc::construction_failure:     return "ConstructionFailure";
    case errc::inconsistent_poset:       return "InconsistentPoset";
    case errc::verification_failure:     return "VerificationFailure";
    case errc::internal_error:           return "InternalError";
  }
  return "UnknownError";
}

int Config::effective_jobs() const {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  require(in.good(), errc::parameter_mismatch,
          "cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(errc::parameter_mismatch,
          "config file is not valid JSON: " + std::string(e.what()));
  }
  require(j.is_object(), errc::parameter_mismatch,
          "config file must hold a JSON object");
  static const std::set<std::string> known = {
      "max_n",        "max_collections",      "max_subsets",
      "float_precision_bits", "witness_eps_floor_exp", "default_trials",
      "default_seed", "jobs"};
  for (const auto& item : j.items())
    require(known.count(item.key()) != 0, errc::parameter_mismatch,
            "unknown config key: " + item.key());
  auto get_int = [&](const char* key, int lo, long long hi, auto& slot) {
    if (!j.contains(key)) return;
    require(j[key].is_number_integer(), errc::parameter_mismatch,
            std::string("config key must be an integer: ") + key);
    long long v = j[key].get<long long>();
    require(v >= lo && v <= hi, errc::parameter_mismatch,
            std::string("config value out of range: ") + key);
    slot = static_cast<std::remove_reference_t<decltype(slot)>>(v);
  };
  get_int("max_n", 1, 64, cfg.max_n);
  get_int("max_collections", 1, 1LL << 40, cfg.max_collections);
  get_int("max_subsets", 1, 1LL << 40, cfg.max_subsets);
  get_int("float_precision_bits", 64, 1 << 20, cfg.float_precision_bits);
  get_int("witness_eps_floor_exp", 1, 4096, cfg.witness_eps_floor_exp);
  get_int("default_trials", 1, 1 << 24, cfg.default_trials);
  get_int("jobs", 0, 4096, cfg.jobs);
  if (j.contains("default_seed")) {
    require(j["default_seed"].is_number_unsigned() ||
                j["default_seed"].is_number_integer(),
            errc::parameter_mismatch, "config default_seed must be integral");
    cfg.default_seed = j["default_seed"].get<std::uint64_t>();
  }
}

Config& config() {
  static Config instance = [] {
    Config c;
    if (const char* path = std::getenv("HYPERGRASS_CONFIG"))
      if (*path) load_config_file(path, c);
    return c;
  }();
  return instance;
}

}  // namespace hypergrass
