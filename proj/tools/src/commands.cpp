#include "heckecert_cli/commands.hpp"

#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "heckecert/binqf.hpp"
#include "heckecert/error.hpp"
#include "heckecert/galoiscert.hpp"
#include "heckecert/hecke.hpp"
#include "heckecert/exactalg.hpp"
#include "heckecert/lperiods.hpp"
#include "heckecert/qseries.hpp"

namespace heckecert::cli {

using nlohmann::json;

namespace {

json coeffs_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json coeffs_json(const RatPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(heckecert::to_string(c));
  return a;
}

json real_json(real v) { return heckecert::to_string(v, 25); }

json complex_json(Complex z) { return json{{"im", real_json(z.im)}, {"re", real_json(z.re)}}; }

json dichotomy_json(const DichotomyResult& r) {
  json j;
  j["n"] = r.m;
  j["kind"] = std::string(to_string(r.kind));
  if (r.lambda) j["lambda"] = r.lambda->get_str();
  return j;
}

}  // namespace

std::string dump_line(const json& j) { return j.dump(); }

EvalConfig eval_config(const RunConfig& cfg) {
  EvalConfig e;
  e.truncation = cfg.truncation;
  e.precision_bits = cfg.precision_bits;
  e.tolerance = cfg.tolerance;
  return e;
}

json verify_weight_record(int w, const RunConfig& cfg, BasisCache& cache, int* exit_code) {
  json rec;
  rec["weight"] = w;
  rec["dim"] = dim_cusp(w);
  json attempts = json::array();
  std::optional<DichotomyResult> witness;
  for (auto n : cfg.witness_indices) {
    DichotomyResult r = lemma31_dichotomy(w, n, cfg.prime_budget, cache);
    attempts.push_back(dichotomy_json(r));
    if (r.kind == DichotomyKind::CertifiedFull) {
      witness = std::move(r);
      break;
    }
  }
  rec["attempts"] = attempts;
  int code = kExitOk;
  if (!witness) {
    rec["status"] = "indeterminate";
    code = kExitIndeterminate;
  } else {
    const PropagationRecord prop = propagate(*witness, cfg.direct_check_primes, cfg.prime_budget, cache);
    rec["witness_n"] = prop.witness_n;
    rec["certificate"] = to_json(prop.witness_certificate);
    rec["conclusion"] = prop.conclusion;
    json checks = json::array();
    for (const auto& dc : prop.direct_checks) {
      json c = dichotomy_json(dc.result);
      c["p"] = dc.p;
      c["consistent"] = dc.consistent;
      checks.push_back(c);
    }
    rec["direct_checks"] = checks;
    rec["alarm"] = prop.alarm;
    if (prop.alarm) {
      rec["status"] = "alarm";
      code = kExitAlarm;
    } else if (!prop.all_consistent) {
      rec["status"] = "indeterminate";
      code = kExitIndeterminate;
    } else {
      rec["status"] = "certified";
    }
  }
  if (exit_code != nullptr) *exit_code = code;
  return rec;
}

int cmd_verify_weights(const RunConfig& cfg, std::ostream& out, const std::string& certificate_dir) {
  validate(cfg);
  std::vector<int> weights;
  for (int w = cfg.weight_min; w <= cfg.weight_max; w += 2)
    if (dim_cusp(w) >= 1) weights.push_back(w);

  std::optional<BasisCache> disk;
  if (!cfg.cache_dir.empty()) disk.emplace(cfg.cache_dir);
  BasisCache& cache = disk ? *disk : default_basis_cache();
  if (!certificate_dir.empty()) std::filesystem::create_directories(certificate_dir);

  struct Slot {
    bool done = false;
    std::string line;
    int code = kExitOk;
    std::string error;
  };
  std::vector<Slot> slots(weights.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < weights.size(); i = next++) {
      Slot s;
      try {
        json rec = verify_weight_record(weights[i], cfg, cache, &s.code);
        if (!certificate_dir.empty() && rec.contains("certificate")) {
          const auto path = std::filesystem::path(certificate_dir) /
                            ("cert-w" + std::to_string(weights[i]) + "-n" + rec["witness_n"].dump() + ".json");
          std::ofstream f(path);
          f << rec["certificate"].dump(2) << "\n";
          require(static_cast<bool>(f), ErrorKind::Io, "cannot write " + path.string());
        }
        s.line = dump_line(rec);
      } catch (const std::exception& e) {
        s.error = "weight " + std::to_string(weights[i]) + ": " + e.what();
      }
      s.done = true;
      std::lock_guard lock(mutex);
      slots[i] = std::move(s);
      ready.notify_all();
    }
  };

  const unsigned n_workers = std::min<unsigned>(cfg.jobs, std::max<std::size_t>(1, weights.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_workers; ++t) pool.emplace_back(worker);

  // Single writer: emit in weight order as records complete. With one job the
  // calling thread does all the work first.
  if (n_workers == 1) worker();
  int code = kExitOk;
  std::string first_error;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Slot s;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return slots[i].done; });
      s = std::move(slots[i]);
    }
    if (!s.error.empty()) {
      if (first_error.empty()) first_error = s.error;
      continue;
    }
    out << s.line << "\n";
    out.flush();
    code = std::max(code, s.code);
  }
  for (auto& t : pool) t.join();
  if (!first_error.empty()) {
    std::cerr << "error: " << first_error << "\n";
    return kExitFailure;
  }
  return code;
}

int cmd_charpoly(unsigned long n, int w, const RunConfig& cfg, std::ostream& out, bool plain) {
  require(n >= 1, ErrorKind::InvalidInput, "n must be >= 1");
  require(w >= 0 && w % 2 == 0, ErrorKind::InvalidInput, "weight must be even and non-negative");
  std::optional<BasisCache> disk;
  if (!cfg.cache_dir.empty()) disk.emplace(cfg.cache_dir);
  const HeckeMatrix m = disk ? hecke_matrix(n, w, *disk) : hecke_matrix(n, w);
  const IntPoly f = charpoly(m.entries);
  if (plain) {
    out << f.to_string() << "\n";
    return kExitOk;
  }
  if (cfg.format == OutputFormat::Csv) {
    out << "# T_" << n << "," << w << "(X), dense coefficients, lowest degree first\n";
    out << "degree,coefficient\n";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out << i << "," << f.coeffs()[i].get_str() << "\n";
    return kExitOk;
  }
  json j;
  j["n"] = n;
  j["weight"] = w;
  j["dim"] = m.dim();
  j["order"] = "low_to_high";
  j["coefficients"] = coeffs_json(f);
  j["polynomial"] = f.to_string();
  out << dump_line(j) << "\n";
  return kExitOk;
}

int cmd_forms(long delta, const std::vector<long>& ds, bool published, const RunConfig& cfg, std::ostream& out) {
  std::vector<Form> forms;
  if (published) {
    auto printed = published_straddling_list(delta);
    require(printed.has_value(), ErrorKind::InvalidInput, "no printed list for discriminant " + std::to_string(delta));
    forms = *printed;
  } else {
    forms = enumerate_straddling(BigInt(delta));
  }
  std::vector<std::vector<int>> chis(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (long d : ds) chis[i].push_back(genus_char(BigInt(d), forms[i]));

  if (cfg.format == OutputFormat::Csv) {
    out << "a,b,c,disc";
    for (long d : ds) out << ",chi_" << d;
    out << "\n";
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const Form& q = forms[i];
      out << q.a.get_str() << "," << q.b.get_str() << "," << q.c.get_str() << "," << q.discriminant().get_str();
      for (int c : chis[i]) out << "," << c;
      out << "\n";
    }
    return kExitOk;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Form& q = forms[i];
    json r{{"a", q.a.get_str()}, {"b", q.b.get_str()}, {"c", q.c.get_str()}, {"disc", q.discriminant().get_str()}};
    json c = json::object();
    for (std::size_t j = 0; j < ds.size(); ++j) c[std::to_string(ds[j])] = chis[i][j];
    r["chi"] = c;
    rows.push_back(r);
  }
  out << dump_line(json{{"delta", std::to_string(delta)}, {"count", forms.size()}, {"forms", rows},
                        {"source", published ? "published" : "computed"}})
      << "\n";
  return kExitOk;
}

int cmd_genus_char(long d, long a, long b, long c, std::ostream& out) {
  const Form q = make_form(a, b, c);
  const int chi = genus_char(BigInt(d), q);
  json j{{"form", q.to_string()}, {"d", std::to_string(d)}, {"chi", chi}};
  if (chi != 0) {
    const auto rv = represented_value_coprime(q, BigInt(d));
    j["represented"] = json{{"value", rv.value.get_str()}, {"x", rv.x}, {"y", rv.y}};
  }
  out << dump_line(j) << "\n";
  return kExitOk;
}

int cmd_periods(unsigned k, long D, long d, bool numeric, const RunConfig& cfg, std::ostream& out) {
  const PeriodReport rep = rplus_closed(k, D, d);
  json j;
  j["k"] = k;
  j["D"] = std::to_string(D);
  j["d"] = std::to_string(d);
  j["order"] = "low_to_high";
  j["P"] = coeffs_json(rep.P);
  j["rplus"] = coeffs_json(rep.rplus);
  j["rplus_is_zero"] = rep.rplus.coeffs().empty();
  j["C"] = rep.C_coeff.get_str();
  j["B"] = rep.B_coeff.get_str();
  j["H_product_term"] = heckecert::to_string(rep.H_product_term);
  j["vanishing_weight"] = rep.vanishing_weight;
  int code = kExitOk;
  if (numeric) {
    std::optional<CkFit> fit;
    if (!rep.vanishing_weight) fit = infer_Ck(k, {{D, d}}, eval_config(cfg));
    const NumericPeriods np = fit ? fit->pairs[0].numeric : numeric_rplus(k, D, d, eval_config(cfg));
    json n;
    json coeffs = json::array();
    for (real c : np.coeffs) coeffs.push_back(real_json(c));
    n["rplus_over_i"] = coeffs;
    n["quadrature_error"] = real_json(np.quadrature_error);
    n["evaluation_error"] = real_json(np.evaluation_error);
    n["max_imaginary"] = real_json(np.max_imaginary);
    n["evaluations"] = np.evaluations;
    n["panels"] = np.panels;
    if (fit) {
      n["fitted_scalar"] = real_json(fit->scalar);
      n["fitted_spread"] = real_json(fit->spread_within);
    }
    j["numeric"] = n;
  }
  out << dump_line(j) << "\n";
  return code;
}

int cmd_contradiction(unsigned k_min, unsigned k_max, std::ostream& out) {
  require(k_min >= 2 && k_min <= k_max, ErrorKind::InvalidInput, "k range must be non-empty and start at >= 2");
  int code = kExitOk;
  for (unsigned k = k_min; k <= k_max; ++k) {
    const ContradictionReport rep = contradiction_report(k);
    json j;
    j["k"] = k;
    j["branch"] = rep.odd ? "odd" : "even";
    j["vacuous"] = rep.vacuous;
    j["distinctness"] = rep.distinctness;
    j["alarm"] = rep.alarm;
    json pairs = json::array();
    for (const auto& [D, d] : rep.pairs) pairs.push_back(json::array({std::to_string(D), std::to_string(d)}));
    j["pairs"] = pairs;
    json variants = json::array();
    for (const auto& v : rep.variants) {
      json vj;
      vj["forms"] = to_string(v.options.forms);
      vj["character"] = to_string(v.options.chi);
      json vals = json::array();
      for (const auto& x : v.values) vals.push_back(x.get_str());
      vj["values"] = vals;
      vj["distinct"] = v.distinct;
      vj["comparison_signs"] = v.comparison_signs;
      json rows = json::object();
      for (const auto& r : v.rows)
        if (r.applicable) rows[r.name] = r.matches;
      vj["paper_row_matches"] = rows;
      variants.push_back(vj);
    }
    j["values"] = variants[0]["values"];
    j["paper_row_matches"] = variants[0]["paper_row_matches"];
    j["variants"] = variants;
    out << dump_line(j) << "\n";
    if (rep.alarm) code = kExitAlarm;
  }
  return code;
}

int cmd_hecke_numeric_check(unsigned k, long D, long d, unsigned long p, const std::vector<SamplePoint>& points,
                            double max_residual, const RunConfig& cfg, std::ostream& out) {
  require(!points.empty(), ErrorKind::InvalidInput, "no sample points");
  int code = kExitOk;
  json results = json::array();
  for (const auto& pt : points) {
    const HeckeCheck h = check_hecke_identity(k, D, d, p, Complex{pt.re, pt.im}, eval_config(cfg));
    const bool pass = h.residual <= static_cast<real>(max_residual);
    if (!pass) code = kExitFailure;
    results.push_back(json{{"z", json{{"re", pt.re}, {"im", pt.im}}},
                           {"lhs", complex_json(h.lhs)},
                           {"rhs", complex_json(h.rhs)},
                           {"residual", real_json(h.residual)},
                           {"error_estimate", real_json(h.error_estimate)},
                           {"evaluations", h.evaluations},
                           {"pass", pass}});
  }
  out << dump_line(json{{"k", k},
                        {"D", std::to_string(D)},
                        {"d", std::to_string(d)},
                        {"p", p},
                        {"max_residual", max_residual},
                        {"points", results}})
      << "\n";
  return code;
}

int cmd_verify_certificate(const std::string& path, std::ostream& out) {
  std::ifstream f(path);
  require(static_cast<bool>(f), ErrorKind::Io, "cannot open certificate file " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, path + ": " + e.what());
  }
  const Certificate cert = certificate_from_json(j);
  const ReplayResult r = verify_certificate(cert);
  out << dump_line(json{{"file", path}, {"ok", r.ok}, {"message", r.message}, {"degree", cert.degree},
                        {"rule", cert.rule}})
      << "\n";
  return r.ok ? kExitOk : kExitFailure;
}

}  // namespace heckecert::cli
