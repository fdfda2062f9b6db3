#include "heckecert/galoiscert.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "heckecert/error.hpp"
#include "heckecert/exactalg.hpp"
#include "heckecert/hecke.hpp"
#include "heckecert/modarith.hpp"

namespace heckecert {

namespace {

using json = nlohmann::json;

constexpr std::string_view kCertificateFormat = "heckecert-certificate-1";

// Rows are tried by degree; each names exactly the evidence its checker demands.
constexpr std::array<GaloisRule, 8> kRules{{
    {"S1-trivial", 1, 1, false, false, false, false, false, "degree one: a good prime suffices"},
    {"S2-transitive", 2, 2, false, false, false, false, false, "transitive subgroup of S_2 is S_2"},
    {"S3-discriminant", 3, 3, true, false, false, false, false,
     "transitive with non-square discriminant: not A_3, hence S_3"},
    {"S4-three-cycle-odd", 4, 4, false, true, true, false, false,
     "transitive with a 3-cycle (pattern {1,3}) is A_4 or S_4; an odd element gives S_4"},
    {"S5-three-cycle-odd", 5, 5, false, true, true, false, false,
     "transitive of prime degree with a 3-cycle obtained by powering contains A_5; odd gives S_5"},
    {"S6-primitive-small-cycle-odd", 6, 6, false, true, true, true, false,
     "pattern {1,5} makes the group 2-transitive; a 2- or 3-cycle by powering then gives A_6 or S_6; "
     "odd gives S_6"},
    {"S7-small-cycle-odd", 7, 7, false, true, true, false, false,
     "transitive of prime degree is primitive; a 2- or 3-cycle by powering gives A_7 or S_7; odd gives S_7"},
    {"Jordan-prime-cycle", 8, 0, false, true, true, false, true,
     "transitive with a q-cycle, q prime, n/2 < q < n-2, contains A_n; an odd element (or, for n <= 20, "
     "a non-square discriminant) gives S_n"},
}};

bool is_small_prime(unsigned q) { return q >= 2 && modarith::is_prime(q); }

// Bit k set iff some sub-multiset of the parts sums to k.
std::vector<char> subset_sums(unsigned n, std::span<const unsigned> degrees) {
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (unsigned d : degrees)
    for (unsigned k = n; k >= d; --k)
      if (reach[k - d]) reach[k] = 1;
  return reach;
}

bool only_trivial_sums(const std::vector<char>& reach) {
  for (std::size_t k = 1; k + 1 < reach.size(); ++k)
    if (reach[k]) return false;
  return true;
}

std::optional<FactorPattern> good_pattern(const IntPoly& f, std::uint64_t p) {
  if (mod_u64(f.leading(), p) == 0) return std::nullopt;
  FactorPattern pattern = degree_pattern(reduce_mod(f, p));
  if (!pattern.squarefree) return std::nullopt;
  return pattern;
}

// Incrementally collects irreducibility evidence from successive patterns.
class IrreducibilityScan {
 public:
  explicit IrreducibilityScan(unsigned n) : n_(n), reach_(n + 1, 1) {}

  void add(const FactorPattern& pattern) {
    if (done_) return;
    if (pattern.degrees.size() == 1) {
      evidence_.primes = {{pattern.p, pattern.degrees}};
      done_ = true;
      return;
    }
    const auto sums = subset_sums(n_, pattern.degrees);
    bool shrinks = false;
    for (unsigned k = 0; k <= n_; ++k) {
      if (reach_[k] && !sums[k]) {
        reach_[k] = 0;
        shrinks = true;
      }
    }
    if (shrinks) collected_.push_back({pattern.p, pattern.degrees});
    if (only_trivial_sums(reach_)) {
      evidence_.primes = collected_;
      done_ = true;
    }
  }

  bool done() const noexcept { return done_; }
  const IrreducibilityEvidence& evidence() const noexcept { return evidence_; }

 private:
  unsigned n_;
  std::vector<char> reach_;
  std::vector<PrimeWitness> collected_;
  IrreducibilityEvidence evidence_;
  bool done_ = false;
};

json witness_json(const PrimeWitness& w) {
  json pattern = json::array();
  for (unsigned d : w.degrees) pattern.push_back(std::to_string(d));
  return json{{"pattern", pattern}, {"prime", std::to_string(w.p)}};
}

PrimeWitness witness_from_json(const json& j) {
  PrimeWitness w;
  w.p = std::stoull(j.at("prime").get<std::string>());
  for (const auto& d : j.at("pattern")) w.degrees.push_back(static_cast<unsigned>(std::stoul(d.get<std::string>())));
  return w;
}

json optional_witness_json(const std::optional<PrimeWitness>& w) { return w ? witness_json(*w) : json(nullptr); }

std::optional<PrimeWitness> optional_witness_from_json(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return witness_from_json(j.at(key));
}

ReplayResult replay_fail(std::string msg) { return {false, std::move(msg)}; }

// Recomputes the pattern at w.p and compares it to the stored one.
std::optional<std::string> replay_witness(const IntPoly& f, const PrimeWitness& w, std::string_view role) {
  const std::string where = std::string(role) + " witness p=" + std::to_string(w.p);
  if (!modarith::is_prime(w.p)) return where + ": not prime";
  if (mod_u64(f.leading(), w.p) == 0) return where + ": divides the leading coefficient";
  const FactorPattern pattern = degree_pattern(reduce_mod(f, w.p));
  if (!pattern.squarefree) return where + ": reduction is not squarefree";
  if (pattern.degrees != w.degrees) return where + ": stored pattern does not match recomputation";
  return std::nullopt;
}

}  // namespace

std::span<const GaloisRule> galois_rules() { return kRules; }

const GaloisRule& rule_for_degree(unsigned n) {
  require(n >= 1, ErrorKind::InvalidInput, "no Galois rule for degree 0");
  for (const auto& rule : kRules)
    if (n >= rule.min_degree && (rule.max_degree == 0 || n <= rule.max_degree)) return rule;
  fail(ErrorKind::Internal, "rule table has a gap at degree " + std::to_string(n));
}

const GaloisRule* find_rule(std::string_view name) {
  for (const auto& rule : kRules)
    if (rule.name == name) return &rule;
  return nullptr;
}

bool is_odd_pattern(std::span<const unsigned> degrees) {
  unsigned long transpositions = 0;
  for (unsigned d : degrees) transpositions += d - 1;
  return transpositions % 2 == 1;
}

bool is_cycle_witness(unsigned n, std::span<const unsigned> degrees) {
  auto isolated_part = [&](unsigned q) {
    // q occurs once and every other part is prime to q, so a power of the element is a q-cycle.
    bool seen = false;
    for (unsigned d : degrees) {
      if (d == q && !seen) {
        seen = true;
      } else if (std::gcd(d, q) != 1) {
        return false;
      }
    }
    return seen;
  };
  if (n == 4) return std::vector<unsigned>(degrees.begin(), degrees.end()) == std::vector<unsigned>{1, 3};
  if (n == 5) return isolated_part(3);
  if (n == 6 || n == 7) return isolated_part(2) || isolated_part(3);
  if (n >= 8) {
    for (unsigned q : degrees)
      if (2 * q > n && q + 2 < n && is_small_prime(q) && isolated_part(q)) return true;
  }
  return false;
}

bool is_primitivity_witness(unsigned n, std::span<const unsigned> degrees) {
  return n >= 2 && degrees.size() == 2 && degrees[0] == 1 && degrees[1] == n - 1;
}

nlohmann::json to_json(const Certificate& cert) {
  json coeffs = json::array();
  for (const auto& c : cert.poly.coeffs()) coeffs.push_back(c.get_str());
  json irr = json::array();
  for (const auto& w : cert.irreducibility.primes) irr.push_back(witness_json(w));
  return json{
      {"cycle_witness", optional_witness_json(cert.cycle)},
      {"degree", std::to_string(cert.degree)},
      {"discriminant", cert.discriminant ? json(cert.discriminant->get_str()) : json(nullptr)},
      {"format", kCertificateFormat},
      {"irreducibility", irr},
      {"odd_witness", optional_witness_json(cert.odd)},
      {"polynomial_low_to_high", coeffs},
      {"primitivity_witness", optional_witness_json(cert.primitive)},
      {"rule", cert.rule},
  };
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    require(j.at("format").get<std::string>() == kCertificateFormat, ErrorKind::InvalidInput,
            "unknown certificate format");
    Certificate cert;
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("polynomial_low_to_high")) coeffs.push_back(parse_bigint(c.get<std::string>()));
    cert.poly = IntPoly(std::move(coeffs));
    cert.degree = static_cast<unsigned>(std::stoul(j.at("degree").get<std::string>()));
    cert.rule = j.at("rule").get<std::string>();
    for (const auto& w : j.at("irreducibility")) cert.irreducibility.primes.push_back(witness_from_json(w));
    cert.cycle = optional_witness_from_json(j, "cycle_witness");
    cert.odd = optional_witness_from_json(j, "odd_witness");
    cert.primitive = optional_witness_from_json(j, "primitivity_witness");
    if (j.contains("discriminant") && !j.at("discriminant").is_null())
      cert.discriminant = parse_bigint(j.at("discriminant").get<std::string>());
    return cert;
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed certificate: ") + e.what());
  } catch (const std::logic_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed certificate field: ") + e.what());
  }
}

ReplayResult verify_certificate(const Certificate& cert) {
  const IntPoly& f = cert.poly;
  const unsigned n = cert.degree;
  if (f.degree() < 1 || static_cast<unsigned>(f.degree()) != n) return replay_fail("degree does not match polynomial");
  if (!f.is_monic()) return replay_fail("polynomial is not monic");
  const GaloisRule& rule = rule_for_degree(n);
  if (rule.name != cert.rule) return replay_fail("rule '" + cert.rule + "' does not apply to degree " + std::to_string(n));

  const auto& primes = cert.irreducibility.primes;
  if (primes.empty()) return replay_fail("no irreducibility evidence");
  std::vector<char> reach(n + 1, 1);
  bool single = false;
  for (const auto& w : primes) {
    if (auto err = replay_witness(f, w, "irreducibility")) return replay_fail(*err);
    if (w.degrees.size() == 1) single = true;
    const auto sums = subset_sums(n, w.degrees);
    for (unsigned k = 0; k <= n; ++k) reach[k] = reach[k] && sums[k];
  }
  if (!single && !only_trivial_sums(reach)) return replay_fail("irreducibility evidence leaves a proper factor degree");

  if (rule.needs_cycle) {
    if (!cert.cycle) return replay_fail("missing cycle witness");
    if (auto err = replay_witness(f, *cert.cycle, "cycle")) return replay_fail(*err);
    if (!is_cycle_witness(n, cert.cycle->degrees)) return replay_fail("cycle witness pattern does not qualify");
  }
  if (rule.needs_primitive) {
    if (!cert.primitive) return replay_fail("missing primitivity witness");
    if (auto err = replay_witness(f, *cert.primitive, "primitivity")) return replay_fail(*err);
    if (!is_primitivity_witness(n, cert.primitive->degrees)) return replay_fail("primitivity pattern does not qualify");
  }

  bool disc_nonsquare = false;
  if (cert.discriminant) {
    const BigInt disc = discriminant(f);
    if (disc != *cert.discriminant) return replay_fail("stored discriminant does not match recomputation");
    disc_nonsquare = !is_perfect_square(disc);
  }
  if (rule.needs_discriminant && !disc_nonsquare) return replay_fail("discriminant missing or a square");
  if (rule.needs_odd) {
    if (cert.odd) {
      if (auto err = replay_witness(f, *cert.odd, "odd")) return replay_fail(*err);
      if (!is_odd_pattern(cert.odd->degrees)) return replay_fail("odd witness pattern is even");
    } else if (!(rule.discriminant_may_replace_odd && n <= 20 && disc_nonsquare)) {
      return replay_fail("missing odd-permutation evidence");
    }
  }
  return {true, "certificate verified: Gal = S_" + std::to_string(n) + " by " + cert.rule};
}

std::optional<IrreducibilityEvidence> certify_irreducible(const IntPoly& f, std::size_t prime_budget) {
  require(f.degree() >= 1 && f.is_monic(), ErrorKind::InvalidInput, "certify_irreducible needs a monic polynomial");
  IrreducibilityScan scan(static_cast<unsigned>(f.degree()));
  for (std::uint64_t p : modarith::small_primes(prime_budget)) {
    if (auto pattern = good_pattern(f, p)) scan.add(*pattern);
    if (scan.done()) return scan.evidence();
  }
  return std::nullopt;
}

std::optional<Certificate> certify_full_galois(const IntPoly& f, std::size_t prime_budget) {
  require(f.degree() >= 1 && f.is_monic(), ErrorKind::InvalidInput, "certify_full_galois needs a monic polynomial");
  const auto n = static_cast<unsigned>(f.degree());
  const GaloisRule& rule = rule_for_degree(n);
  Certificate cert;
  cert.poly = f;
  cert.degree = n;
  cert.rule = std::string(rule.name);

  IrreducibilityScan scan(n);
  auto complete = [&] {
    return scan.done() && (!rule.needs_cycle || cert.cycle) && (!rule.needs_odd || cert.odd) &&
           (!rule.needs_primitive || cert.primitive);
  };
  for (std::uint64_t p : modarith::small_primes(prime_budget)) {
    if (complete()) break;
    const auto pattern = good_pattern(f, p);
    if (!pattern) continue;
    scan.add(*pattern);
    const PrimeWitness w{p, pattern->degrees};
    if (rule.needs_cycle && !cert.cycle && is_cycle_witness(n, w.degrees)) cert.cycle = w;
    if (rule.needs_odd && !cert.odd && is_odd_pattern(w.degrees)) cert.odd = w;
    if (rule.needs_primitive && !cert.primitive && is_primitivity_witness(n, w.degrees)) cert.primitive = w;
  }
  if (!scan.done()) return std::nullopt;
  cert.irreducibility = scan.evidence();
  if (rule.needs_cycle && !cert.cycle) return std::nullopt;
  if (rule.needs_primitive && !cert.primitive) return std::nullopt;

  const bool disc_for_parity = rule.needs_odd && !cert.odd && rule.discriminant_may_replace_odd && n <= 20;
  if (rule.needs_discriminant || disc_for_parity) {
    cert.discriminant = discriminant(f);
    if (is_perfect_square(*cert.discriminant)) return std::nullopt;
  }
  if (rule.needs_odd && !cert.odd && !cert.discriminant) return std::nullopt;
  return cert;
}

std::string_view to_string(DichotomyKind kind) {
  switch (kind) {
    case DichotomyKind::CertifiedFull:
      return "certified_full";
    case DichotomyKind::Scalar:
      return "scalar";
    case DichotomyKind::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

DichotomyResult lemma31_dichotomy(int w, unsigned long m, std::size_t prime_budget, BasisCache& cache) {
  const std::size_t d = dim_cusp(w);
  require(d >= 1, ErrorKind::Precondition, "dim S_" + std::to_string(w) + " = 0");
  const HeckeMatrix hm = hecke_matrix(m, w, cache);
  DichotomyResult result;
  result.w = w;
  result.m = m;
  result.charpoly = charpoly(hm.entries);
  const auto lambda = is_scalar(hm);
  if (lambda && (d >= 2 || m == 1)) {
    result.kind = DichotomyKind::Scalar;
    result.lambda = lambda;
    return result;
  }
  result.certificate = certify_full_galois(result.charpoly, prime_budget);
  result.kind = result.certificate ? DichotomyKind::CertifiedFull : DichotomyKind::Indeterminate;
  return result;
}

DichotomyResult lemma31_dichotomy(int w, unsigned long m, std::size_t prime_budget) {
  return lemma31_dichotomy(w, m, prime_budget, default_basis_cache());
}

PropagationRecord propagate(const DichotomyResult& witness, std::span<const unsigned long> direct_check_primes,
                            std::size_t prime_budget, BasisCache& cache) {
  require(dim_cusp(witness.w) >= 1, ErrorKind::Precondition, "dim S_" + std::to_string(witness.w) + " = 0");
  require(witness.kind == DichotomyKind::CertifiedFull && witness.certificate.has_value(), ErrorKind::Precondition,
          "witness T_" + std::to_string(witness.m) + " is not certified");
  const ReplayResult replay = verify_certificate(*witness.certificate);
  require(replay.ok, ErrorKind::Precondition, "witness certificate does not replay: " + replay.message);

  PropagationRecord record;
  record.w = witness.w;
  record.witness_n = witness.m;
  record.witness_certificate = *witness.certificate;
  record.conclusion = "T_{p," + std::to_string(witness.w) + "}(X) is irreducible with Galois group S_" +
                      std::to_string(dim_cusp(witness.w)) + " for all primes p";
  record.all_consistent = true;
  for (unsigned long p : direct_check_primes) {
    // The witness index is its own direct check; no need to redo it.
    DirectCheck check{p, p == witness.m ? witness : lemma31_dichotomy(witness.w, p, prime_budget, cache), false};
    check.consistent = check.result.kind == DichotomyKind::CertifiedFull;
    if (check.result.kind == DichotomyKind::Scalar) record.alarm = true;
    record.all_consistent = record.all_consistent && check.consistent;
    record.direct_checks.push_back(std::move(check));
  }
  return record;
}

PropagationRecord propagate(int w, unsigned long witness_n, std::span<const unsigned long> direct_check_primes,
                            std::size_t prime_budget) {
  require(w >= 0 && w % 2 == 0, ErrorKind::InvalidInput, "weight must be even");
  require(dim_cusp(w) >= 1, ErrorKind::Precondition, "dim S_" + std::to_string(w) + " = 0");
  const DichotomyResult witness = lemma31_dichotomy(w, witness_n, prime_budget);
  return propagate(witness, direct_check_primes, prime_budget, default_basis_cache());
}

}  // namespace heckecert
