#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "heckecert/error.hpp"
#include "heckecert_cli/commands.hpp"

using namespace heckecert;
using namespace heckecert::cli;

namespace {

std::vector<SamplePoint> parse_points(const std::vector<std::string>& texts) {
  std::vector<SamplePoint> out;
  for (const auto& t : texts) {
    std::istringstream is(t);
    SamplePoint p;
    char comma = 0;
    require(static_cast<bool>(is >> p.re >> comma >> p.im) && comma == ',' && is.peek() == EOF, ErrorKind::InvalidInput,
            "sample point '" + t + "' is not of the form re,im");
    out.push_back(p);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke characteristic polynomials, Galois certificates and period-polynomial checks"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig cfg;
  std::string config_file;
  std::string format = "json";
  bool dump_config = false;
  std::string top_certificate;

  app.add_option("--config", config_file, "RunConfig JSON file; explicit flags override it")->check(CLI::ExistingFile);
  app.add_flag("--dump-config", dump_config, "print the effective RunConfig and exit");
  app.add_option("--verify-certificate", top_certificate, "replay a certificate file and exit");
  auto* o_wmin = app.add_option("--weight-min", cfg.weight_min, "first weight (even)");
  auto* o_wmax = app.add_option("--weight-max", cfg.weight_max, "last weight (even)");
  auto* o_wit = app.add_option("--witness", cfg.witness_indices, "witness indices tried in order");
  auto* o_budget = app.add_option("--prime-budget", cfg.prime_budget, "primes scanned per certificate");
  auto* o_direct = app.add_option("--direct-primes", cfg.direct_check_primes, "primes checked directly");
  auto* o_trunc = app.add_option("--truncation", cfg.truncation, "lattice-sum bound A (0 = from tolerance)");
  auto* o_prec = app.add_option("--precision-bits", cfg.precision_bits, "working precision (<= 113)");
  auto* o_tol = app.add_option("--tolerance", cfg.tolerance, "numeric tolerance, relative");
  auto* o_cache = app.add_option("--cache-dir", cfg.cache_dir, "persistent basis cache directory");
  auto* o_fmt = app.add_option("--format", format, "json|csv");
  auto* o_jobs = app.add_option("--jobs,-j", cfg.jobs, "worker threads");

  auto* verify = app.add_subcommand("verify-weights", "certify T_n for every weight in the range");
  std::string cert_dir;
  verify->add_option("--certificate-dir", cert_dir, "write each witness certificate here");

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of T_n on S_w");
  unsigned long cp_n = 2;
  int cp_w = 12;
  bool cp_plain = false;
  charpoly->add_option("n", cp_n)->required();
  charpoly->add_option("w", cp_w)->required();
  charpoly->add_flag("--plain", cp_plain, "print only the polynomial");

  auto* forms = app.add_subcommand("forms", "straddling forms of a discriminant with genus characters");
  long f_delta = 0;
  std::vector<long> f_ds;
  bool f_published = false;
  forms->add_option("delta", f_delta)->required();
  forms->add_option("--chi", f_ds, "fundamental d values (columns chi_d)");
  forms->add_flag("--published", f_published, "use the printed list instead of enumerating");

  auto* genus = app.add_subcommand("genus-char", "chi_d of one form");
  long g_d = 1, g_a = 0, g_b = 0, g_c = 0;
  genus->add_option("d", g_d)->required();
  genus->add_option("a", g_a)->required();
  genus->add_option("b", g_b)->required();
  genus->add_option("c", g_c)->required();

  auto* periods = app.add_subcommand("periods", "closed-form r+ and optional numeric cross-check");
  unsigned p_k = 6;
  long p_D = 5, p_d = 1;
  bool p_numeric = false;
  periods->add_option("k", p_k)->required();
  periods->add_option("D", p_D)->required();
  periods->add_option("d", p_d)->required();
  periods->add_flag("--numeric", p_numeric, "also integrate r+ numerically and fit the scalar");

  auto* contra = app.add_subcommand("contradiction", "C / B tables with distinctness per k");
  unsigned c_min = 2, c_max = 40;
  contra->add_option("k_min", c_min)->required();
  contra->add_option("k_max", c_max)->required();

  auto* hnc = app.add_subcommand("hecke-numeric-check", "numeric Hecke identity for f_{k,D,d}");
  unsigned h_k = 6;
  long h_D = 5, h_d = 1;
  unsigned long h_p = 2;
  std::vector<std::string> h_points{"0.3,1.1", "0.1,0.5"};
  double h_max = 1e-6;
  hnc->add_option("k", h_k)->required();
  hnc->add_option("D", h_D)->required();
  hnc->add_option("d", h_d)->required();
  hnc->add_option("p", h_p)->required();
  hnc->add_option("--z", h_points, "sample point re,im (repeatable)");
  hnc->add_option("--max-residual", h_max, "pass threshold");

  auto* vcert = app.add_subcommand("verify-certificate", "replay a certificate file");
  std::string v_file;
  vcert->add_option("file", v_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_file.empty()) {
      std::ifstream f(config_file);
      nlohmann::json j;
      try {
        f >> j;
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidInput, config_file + ": " + e.what());
      }
      RunConfig loaded = run_config_from_json(j);
      // Flags given explicitly win over the file.
      if (*o_wmin) loaded.weight_min = cfg.weight_min;
      if (*o_wmax) loaded.weight_max = cfg.weight_max;
      if (*o_wit) loaded.witness_indices = cfg.witness_indices;
      if (*o_budget) loaded.prime_budget = cfg.prime_budget;
      if (*o_direct) loaded.direct_check_primes = cfg.direct_check_primes;
      if (*o_trunc) loaded.truncation = cfg.truncation;
      if (*o_prec) loaded.precision_bits = cfg.precision_bits;
      if (*o_tol) loaded.tolerance = cfg.tolerance;
      if (*o_cache) loaded.cache_dir = cfg.cache_dir;
      if (*o_jobs) loaded.jobs = cfg.jobs;
      if (*o_fmt) loaded.format = parse_format(format);
      cfg = loaded;
    } else {
      cfg.format = parse_format(format);
    }
    validate(cfg);

    if (dump_config) {
      std::cout << to_json(cfg).dump(2) << "\n";
      return kExitOk;
    }
    if (!top_certificate.empty()) return cmd_verify_certificate(top_certificate, std::cout);

    if (*verify) return cmd_verify_weights(cfg, std::cout, cert_dir);
    if (*charpoly) return cmd_charpoly(cp_n, cp_w, cfg, std::cout, cp_plain);
    if (*forms) return cmd_forms(f_delta, f_ds, f_published, cfg, std::cout);
    if (*genus) return cmd_genus_char(g_d, g_a, g_b, g_c, std::cout);
    if (*periods) return cmd_periods(p_k, p_D, p_d, p_numeric, cfg, std::cout);
    if (*contra) return cmd_contradiction(c_min, c_max, std::cout);
    if (*hnc) return cmd_hecke_numeric_check(h_k, h_D, h_d, h_p, parse_points(h_points), h_max, cfg, std::cout);
    if (*vcert) return cmd_verify_certificate(v_file, std::cout);

    std::cout << app.help();
    return kExitOk;
  } catch (const heckecert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
