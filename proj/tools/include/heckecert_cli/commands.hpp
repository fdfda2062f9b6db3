#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "heckecert/analytic.hpp"
#include "heckecert/basis_cache.hpp"
#include "heckecert_cli/run_config.hpp"

namespace heckecert::cli {

// Exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // bad input, I/O, or a failed numeric/replay check
inline constexpr int kExitIndeterminate = 2;
inline constexpr int kExitAlarm = 3;

/// One JSON record per weight with dim S_w >= 1, in weight order; `certificate_dir`
/// (optional) receives each witness certificate as cert-w<w>-n<n>.json.
int cmd_verify_weights(const RunConfig& cfg, std::ostream& out, const std::string& certificate_dir = "");

/// Builds the record for one weight (exposed for tests).
nlohmann::json verify_weight_record(int w, const RunConfig& cfg, BasisCache& cache, int* exit_code);

int cmd_charpoly(unsigned long n, int w, const RunConfig& cfg, std::ostream& out, bool plain = false);

int cmd_forms(long delta, const std::vector<long>& ds, bool published, const RunConfig& cfg, std::ostream& out);

int cmd_genus_char(long d, long a, long b, long c, std::ostream& out);

int cmd_periods(unsigned k, long D, long d, bool numeric, const RunConfig& cfg, std::ostream& out);

int cmd_contradiction(unsigned k_min, unsigned k_max, std::ostream& out);

struct SamplePoint {
  double re = 0;
  double im = 0;
};
int cmd_hecke_numeric_check(unsigned k, long D, long d, unsigned long p, const std::vector<SamplePoint>& points,
                            double max_residual, const RunConfig& cfg, std::ostream& out);

int cmd_verify_certificate(const std::string& path, std::ostream& out);

EvalConfig eval_config(const RunConfig& cfg);

/// Compact JSON text with sorted keys; one record per line.
std::string dump_line(const nlohmann::json& j);

}  // namespace heckecert::cli
