#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckecert/bigint.hpp"
#include "heckecert/binqf.hpp"
#include "heckecert/poly.hpp"

namespace heckecert {

/// B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);
/// B_m(x) = sum_j C(m, j) B_j x^{m-j}.
Rational bernoulli_polynomial(unsigned m, const Rational& x);
/// zeta(1 - 2k) = -B_{2k} / 2k.
Rational zeta_neg(unsigned k);

/// Generalised Bernoulli number B_{m, chi} for chi = (delta0 / .), f = |delta0|.
Rational generalized_bernoulli(unsigned m, long delta0);
/// H(m, N) = L(1 - m, chi_{delta0}) = -B_{m, chi} / m, delta0 = sign * n_abs fundamental
/// (1 allowed); throws Unsupported otherwise.
Rational cohen_H(unsigned m, long n_abs, int sign);

/// Which straddling set a coefficient is summed over.
enum class FormSource { Computed, Published };
/// chi_d from the genus character, or identically 1.
enum class CharMode { Genus, Trivial };

struct CoeffOptions {
  FormSource forms = FormSource::Computed;
  CharMode chi = CharMode::Genus;
};

std::string to_string(FormSource s);
std::string to_string(CharMode m);

/// Straddling forms of discriminant D*d with their character values.
struct WeightedForm {
  Form form;
  int chi = 0;
};
std::vector<WeightedForm> weighted_forms(long D, long d, const CoeffOptions& opts = {});

/// Checks sign D = sign d = (-1)^k, d fundamental, D*d a positive discriminant.
void check_period_inputs(unsigned k, long D, long d);

/// sum over straddling [a, b, c] of chi_d([a, b, c]) (a X^2 + b X + c)^{k-1}; asserts evenness.
IntPoly P_poly(unsigned k, long D, long d, const CoeffOptions& opts = {});

struct PeriodReport {
  unsigned k = 0;
  long D = 0;
  long d = 0;
  IntPoly P;
  RatPoly rplus;
  BigInt C_coeff;  // constant term of P
  BigInt B_coeff;  // X^2 coefficient of P
  Rational H_product_term;  // H(k,|D|) H(k,|d|) / (2 zeta(1-2k))
  bool vanishing_weight = false;  // dim S_{2k} = 0
};

/// r^+ = P + H_product_term (X^{2k-2} - 1). Requires D, d, D*d fundamental; asserts
/// r^+ = 0 when dim S_{2k} = 0.
PeriodReport rplus_closed(unsigned k, long D, long d);

/// sum chi_d c^{k-1}; equal to the constant term of P_poly (checked).
BigInt coeff_C(unsigned k, long D, long d, const CoeffOptions& opts = {});
/// (k-1) sum chi_d c^{k-3} (ac + (k-2)/2 b^2), computed as (k-1) * S with S exact
/// (S = sum chi_d a at k = 2). Throws InvalidInput for odd k or k < 2.
BigInt coeff_B(unsigned k, long D, long d, const CoeffOptions& opts = {});
/// The inner sum S = B / (k - 1).
BigInt coeff_B_reduced(unsigned k, long D, long d, const CoeffOptions& opts = {});

/// One printed inequality or equality checked at a given k.
struct PaperRow {
  std::string name;
  bool applicable = false;
  bool matches = false;
};

struct ContradictionVariant {
  CoeffOptions options;
  std::vector<BigInt> values;  // C for (-3,-4),(-3,-7),(-3,-11) or B/(k-1) for (5,1),(5,13),(5,8)
  bool distinct = false;
  std::vector<int> comparison_signs;  // odd k: sign(C1 - C2), sign(C2 - C3), sign(C1 - C3)
  std::vector<PaperRow> rows;
};

struct ContradictionReport {
  unsigned k = 0;
  bool odd = false;
  std::vector<std::pair<long, long>> pairs;  // (D, d) in value order
  bool vacuous = false;  // dim S_{2k} = 0
  bool distinctness = false;  // primary variant
  bool alarm = false;  // not vacuous and not distinct
  std::vector<ContradictionVariant> variants;  // [0] is computed forms + genus character
};

ContradictionReport contradiction_report(unsigned k);

}  // namespace heckecert
