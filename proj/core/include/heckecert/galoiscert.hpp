#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "heckecert/basis_cache.hpp"
#include "heckecert/modpfactor.hpp"
#include "heckecert/poly.hpp"

namespace heckecert {

inline constexpr std::size_t kDefaultPrimeBudget = 200;

struct PrimeWitness {
  std::uint64_t p = 0;
  std::vector<unsigned> degrees;

  bool operator==(const PrimeWitness&) const = default;
};

/// Either a single prime with pattern {n}, or several primes whose sets of
/// subset sums meet only in {0, n}.
struct IrreducibilityEvidence {
  std::vector<PrimeWitness> primes;

  bool operator==(const IrreducibilityEvidence&) const = default;
};

/// A named criterion that, together with transitivity, forces Gal(f) = S_n.
struct GaloisRule {
  std::string_view name;
  unsigned min_degree;
  unsigned max_degree;  // inclusive; 0 = unbounded
  bool needs_discriminant;  // non-square discriminant required
  bool needs_cycle;
  bool needs_odd;  // an odd pattern (or, where allowed, a non-square discriminant)
  bool needs_primitive;
  bool discriminant_may_replace_odd;
  std::string_view statement;
};

std::span<const GaloisRule> galois_rules();
const GaloisRule& rule_for_degree(unsigned n);
const GaloisRule* find_rule(std::string_view name);

/// Parity of a permutation with the given cycle type: sum of (part - 1) mod 2.
bool is_odd_pattern(std::span<const unsigned> degrees);
/// Pattern yields the cycle required by the rule for degree n after powering.
bool is_cycle_witness(unsigned n, std::span<const unsigned> degrees);
/// Pattern {1, n-1}: with transitivity the group is 2-transitive, hence primitive.
bool is_primitivity_witness(unsigned n, std::span<const unsigned> degrees);

struct Certificate {
  IntPoly poly;
  unsigned degree = 0;
  std::string rule;
  IrreducibilityEvidence irreducibility;
  std::optional<PrimeWitness> cycle;
  std::optional<PrimeWitness> odd;
  std::optional<PrimeWitness> primitive;
  std::optional<BigInt> discriminant;

  bool operator==(const Certificate&) const = default;
};

/// Canonical JSON: sorted keys, every integer as a decimal string.
nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

struct ReplayResult {
  bool ok = false;
  std::string message;
};

/// Re-reduces, re-factors and re-checks every claim from scratch.
ReplayResult verify_certificate(const Certificate& cert);

/// Scans the first `prime_budget` primes; never claims reducibility.
std::optional<IrreducibilityEvidence> certify_irreducible(const IntPoly& f,
                                                          std::size_t prime_budget = kDefaultPrimeBudget);

std::optional<Certificate> certify_full_galois(const IntPoly& f, std::size_t prime_budget = kDefaultPrimeBudget);

enum class DichotomyKind { CertifiedFull, Scalar, Indeterminate };
std::string_view to_string(DichotomyKind kind);

struct DichotomyResult {
  int w = 0;
  unsigned long m = 0;
  DichotomyKind kind = DichotomyKind::Indeterminate;
  IntPoly charpoly;
  std::optional<BigInt> lambda;
  std::optional<Certificate> certificate;
};

/// Case (i) certified, case (ii) T_m = lambda * Id, or no verdict within the budget.
/// When d = 1 both cases hold; (ii) is reported only for T_1.
DichotomyResult lemma31_dichotomy(int w, unsigned long m, std::size_t prime_budget, BasisCache& cache);
DichotomyResult lemma31_dichotomy(int w, unsigned long m, std::size_t prime_budget = kDefaultPrimeBudget);

struct DirectCheck {
  unsigned long p = 0;
  DichotomyResult result;
  bool consistent = false;  // certified full, not scalar
};

struct PropagationRecord {
  int w = 0;
  unsigned long witness_n = 0;
  Certificate witness_certificate;
  std::string conclusion;
  std::vector<DirectCheck> direct_checks;
  bool alarm = false;  // some direct check returned a scalar matrix
  bool all_consistent = false;
};

/// Throws Precondition when dim S_w = 0 or the witness is not certified.
PropagationRecord propagate(const DichotomyResult& witness, std::span<const unsigned long> direct_check_primes,
                            std::size_t prime_budget, BasisCache& cache);
PropagationRecord propagate(int w, unsigned long witness_n, std::span<const unsigned long> direct_check_primes,
                            std::size_t prime_budget = kDefaultPrimeBudget);

}  // namespace heckecert
