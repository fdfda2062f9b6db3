#include "heckecert_cli/run_config.hpp"

#include <set>

#include "heckecert/error.hpp"
#include "heckecert/modarith.hpp"

namespace heckecert::cli {

std::string to_string(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  fail(ErrorKind::InvalidInput, "unknown output format '" + text + "' (json|csv)");
}

void validate(const RunConfig& cfg) {
  require(cfg.weight_min <= cfg.weight_max, ErrorKind::InvalidInput, "weight range is empty");
  require(cfg.weight_min % 2 == 0 && cfg.weight_max % 2 == 0, ErrorKind::InvalidInput,
          "weight range must start and end on even weights");
  require(cfg.weight_min >= 0, ErrorKind::InvalidInput, "weights must be non-negative");
  require(!cfg.witness_indices.empty(), ErrorKind::InvalidInput, "no witness indices");
  for (auto n : cfg.witness_indices) require(n >= 1, ErrorKind::InvalidInput, "witness index must be >= 1");
  for (auto p : cfg.direct_check_primes)
    require(modarith::is_prime(p), ErrorKind::InvalidInput, "direct-check entry " + std::to_string(p) + " is not prime");
  require(cfg.truncation >= 0, ErrorKind::InvalidInput, "truncation must be >= 0");
  require(cfg.precision_bits >= 1 && cfg.precision_bits <= 113, ErrorKind::InvalidInput,
          "precision_bits must lie in [1, 113]");
  require(cfg.tolerance > 0 && cfg.tolerance < 1, ErrorKind::InvalidInput, "tolerance must lie in (0, 1)");
  require(cfg.jobs >= 1, ErrorKind::InvalidInput, "jobs must be >= 1");
}

nlohmann::json to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["cache_dir"] = cfg.cache_dir;
  j["direct_check_primes"] = cfg.direct_check_primes;
  j["format"] = to_string(cfg.format);
  j["jobs"] = cfg.jobs;
  j["precision_bits"] = cfg.precision_bits;
  j["prime_budget"] = cfg.prime_budget;
  j["tolerance"] = cfg.tolerance;
  j["truncation"] = cfg.truncation;
  j["weight_max"] = cfg.weight_max;
  j["weight_min"] = cfg.weight_min;
  j["witness_indices"] = cfg.witness_indices;
  return j;
}

RunConfig run_config_from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorKind::InvalidInput, "run config must be a JSON object");
  static const std::set<std::string> known{"cache_dir", "direct_check_primes", "format",   "jobs",
                                           "precision_bits", "prime_budget", "tolerance", "truncation",
                                           "weight_max", "weight_min", "witness_indices"};
  for (const auto& [key, value] : j.items())
    require(known.count(key) != 0, ErrorKind::InvalidInput, "unknown run config key '" + key + "'");
  RunConfig cfg;
  try {
    if (j.contains("cache_dir")) cfg.cache_dir = j.at("cache_dir").get<std::string>();
    if (j.contains("direct_check_primes")) cfg.direct_check_primes = j.at("direct_check_primes").get<std::vector<unsigned long>>();
    if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<unsigned>();
    if (j.contains("precision_bits")) cfg.precision_bits = j.at("precision_bits").get<unsigned>();
    if (j.contains("prime_budget")) cfg.prime_budget = j.at("prime_budget").get<std::size_t>();
    if (j.contains("tolerance")) cfg.tolerance = j.at("tolerance").get<double>();
    if (j.contains("truncation")) cfg.truncation = j.at("truncation").get<long>();
    if (j.contains("weight_max")) cfg.weight_max = j.at("weight_max").get<int>();
    if (j.contains("weight_min")) cfg.weight_min = j.at("weight_min").get<int>();
    if (j.contains("witness_indices")) cfg.witness_indices = j.at("witness_indices").get<std::vector<unsigned long>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("run config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

}  // namespace heckecert::cli
