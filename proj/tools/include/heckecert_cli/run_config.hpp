#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace heckecert::cli {

enum class OutputFormat { Json, Csv };

std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& text);

struct RunConfig {
  int weight_min = 12;
  int weight_max = 26;
  std::vector<unsigned long> witness_indices{2, 3, 5, 7};
  std::size_t prime_budget = 200;
  std::vector<unsigned long> direct_check_primes{2, 3, 5, 7, 11, 13};
  long truncation = 0;  // 0: chosen from tolerance
  unsigned precision_bits = 113;
  double tolerance = 1e-12;
  std::string cache_dir;  // empty: in-memory only
  OutputFormat format = OutputFormat::Json;
  unsigned jobs = 1;

  bool operator==(const RunConfig&) const = default;
};

/// Throws InvalidInput naming the offending field.
void validate(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
RunConfig run_config_from_json(const nlohmann::json& j);

}  // namespace heckecert::cli
