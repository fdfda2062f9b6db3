#include "heckecert/lperiods.hpp"

#include <mutex>

#include "heckecert/error.hpp"
#include "heckecert/qseries.hpp"

namespace heckecert {

namespace {

int sign_of(long v) { return (v > 0) - (v < 0); }

Rational binomial_q(unsigned n, unsigned k) { return Rational(binomial(n, k)); }

bool eq1_signs(unsigned k, long D, long d) {
  const int s = (k % 2 == 0) ? 1 : -1;
  return sign_of(D) == s && sign_of(d) == s;
}

BigInt ipow(const BigInt& b, unsigned e) { return pow(b, e); }

}  // namespace

Rational bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  while (table.size() <= n) {
    const auto m = static_cast<unsigned>(table.size());
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[j];
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[n];
}

Rational bernoulli_polynomial(unsigned m, const Rational& x) {
  Rational acc = 0;
  Rational xp = 1;  // x^{m-j}, built from j = m downwards
  for (unsigned j = m + 1; j-- > 0;) {
    acc += binomial_q(m, j) * bernoulli(j) * xp;
    xp *= x;
  }
  acc.canonicalize();
  return acc;
}

Rational zeta_neg(unsigned k) {
  require(k >= 1, ErrorKind::InvalidInput, "zeta(1 - 2k) needs k >= 1");
  Rational z = -bernoulli(2 * k) / Rational(2 * k);
  z.canonicalize();
  return z;
}

Rational generalized_bernoulli(unsigned m, long delta0) {
  const long f = std::labs(delta0);
  Rational acc = 0;
  for (long a = 1; a <= f; ++a) {
    const int chi = kronecker(std::int64_t{delta0}, std::int64_t{a});
    if (chi == 0) continue;
    acc += chi * bernoulli_polynomial(m, Rational(a, f));
  }
  acc *= Rational(pow(BigInt(f), m - 1));
  acc.canonicalize();
  return acc;
}

Rational cohen_H(unsigned m, long n_abs, int sign) {
  require(m >= 1 && n_abs >= 1 && (sign == 1 || sign == -1), ErrorKind::InvalidInput, "cohen_H: bad arguments");
  const long delta0 = sign * n_abs;
  require(is_fundamental_discriminant(delta0), ErrorKind::Unsupported,
          "cohen_H is implemented for fundamental discriminants only, got " + std::to_string(delta0));
  Rational h = -generalized_bernoulli(m, delta0) / Rational(m);
  h.canonicalize();
  return h;
}

std::string to_string(FormSource s) { return s == FormSource::Computed ? "computed" : "published"; }
std::string to_string(CharMode m) { return m == CharMode::Genus ? "genus" : "trivial"; }

void check_period_inputs(unsigned k, long D, long d) {
  require(k >= 2, ErrorKind::InvalidInput, "k must be >= 2");
  require(eq1_signs(k, D, d), ErrorKind::InvalidInput,
          "sign condition fails: need sign D = sign d = (-1)^k for k=" + std::to_string(k) + ", D=" +
              std::to_string(D) + ", d=" + std::to_string(d));
  require(is_fundamental_discriminant(d), ErrorKind::InvalidInput, std::to_string(d) + " is not fundamental");
  require(is_discriminant(D), ErrorKind::InvalidInput, std::to_string(D) + " is not a discriminant");
}

std::vector<WeightedForm> weighted_forms(long D, long d, const CoeffOptions& opts) {
  const long delta = D * d;
  std::vector<Form> forms;
  if (opts.forms == FormSource::Computed) {
    forms = enumerate_straddling(delta);
  } else {
    auto printed = published_straddling_list(delta);
    require(printed.has_value(), ErrorKind::InvalidInput, "no printed form list for discriminant " + std::to_string(delta));
    forms = std::move(*printed);
  }
  std::vector<WeightedForm> out;
  out.reserve(forms.size());
  for (auto& q : forms) {
    const int chi = opts.chi == CharMode::Genus ? genus_char(d, q) : 1;
    out.push_back({std::move(q), chi});
  }
  return out;
}

IntPoly P_poly(unsigned k, long D, long d, const CoeffOptions& opts) {
  check_period_inputs(k, D, d);
  IntPoly acc;
  for (const auto& [q, chi] : weighted_forms(D, d, opts)) {
    if (chi == 0) continue;
    const IntPoly term = pow(IntPoly(std::vector<BigInt>{q.c, q.b, q.a}), k - 1);
    if (chi > 0)
      acc += term;
    else
      acc -= term;
  }
  for (std::size_t i = 1; i < acc.coeffs().size(); i += 2)
    require(acc.coeff(i) == 0, ErrorKind::Internal,
            "P_{" + std::to_string(k) + "," + std::to_string(D) + "," + std::to_string(d) + "} has an odd term");
  return acc;
}

PeriodReport rplus_closed(unsigned k, long D, long d) {
  check_period_inputs(k, D, d);
  require(is_fundamental_discriminant(D) && is_fundamental_discriminant(D * d), ErrorKind::Unsupported,
          "closed form needs D, d and D*d fundamental");
  PeriodReport r;
  r.k = k;
  r.D = D;
  r.d = d;
  r.P = P_poly(k, D, d);
  r.C_coeff = r.P.coeff(0);
  r.B_coeff = r.P.coeff(2);
  const int s = (k % 2 == 0) ? 1 : -1;
  r.H_product_term = cohen_H(k, std::labs(D), std::labs(D) == 1 ? 1 : s) *
                     cohen_H(k, std::labs(d), std::labs(d) == 1 ? 1 : s) / (2 * zeta_neg(k));
  r.H_product_term.canonicalize();
  RatPoly rp(r.P);
  std::vector<Rational> h(2 * k - 1);
  h.front() = -r.H_product_term;
  h.back() += r.H_product_term;
  rp += RatPoly(std::move(h));
  r.rplus = std::move(rp);
  r.vanishing_weight = dim_cusp(static_cast<int>(2 * k)) == 0;
  if (r.vanishing_weight)
    require(r.rplus.is_zero(), ErrorKind::Internal,
            "r^+ does not vanish in weight " + std::to_string(2 * k) + ": " + r.rplus.to_string());
  return r;
}

BigInt coeff_C(unsigned k, long D, long d, const CoeffOptions& opts) {
  check_period_inputs(k, D, d);
  BigInt acc = 0;
  for (const auto& [q, chi] : weighted_forms(D, d, opts)) {
    if (chi != 0) acc += chi * ipow(q.c, k - 1);
  }
  return acc;
}

BigInt coeff_B_reduced(unsigned k, long D, long d, const CoeffOptions& opts) {
  require(k >= 2 && k % 2 == 0, ErrorKind::InvalidInput, "B_{k,D,d} needs even k >= 2");
  check_period_inputs(k, D, d);
  BigInt acc = 0;
  for (const auto& [q, chi] : weighted_forms(D, d, opts)) {
    if (chi == 0) continue;
    if (k == 2) {
      acc += chi * q.a;  // c^{-1} * (a c) with (k - 2) / 2 = 0
      continue;
    }
    acc += chi * ipow(q.c, k - 3) * (q.a * q.c + BigInt((k - 2) / 2) * q.b * q.b);
  }
  return acc;
}

BigInt coeff_B(unsigned k, long D, long d, const CoeffOptions& opts) {
  return BigInt(k - 1) * coeff_B_reduced(k, D, d, opts);
}

ContradictionReport contradiction_report(unsigned k) {
  require(k >= 2, ErrorKind::InvalidInput, "contradiction report needs k >= 2");
  ContradictionReport report;
  report.k = k;
  report.odd = k % 2 == 1;
  report.vacuous = dim_cusp(static_cast<int>(2 * k)) == 0;
  if (report.odd)
    report.pairs = {{-3, -4}, {-3, -7}, {-3, -11}};
  else
    report.pairs = {{5, 1}, {5, 13}, {5, 8}};

  const CoeffOptions variants[] = {
      {FormSource::Computed, CharMode::Genus},
      {FormSource::Computed, CharMode::Trivial},
      {FormSource::Published, CharMode::Genus},
      {FormSource::Published, CharMode::Trivial},
  };
  for (const auto& opts : variants) {
    ContradictionVariant v;
    v.options = opts;
    for (const auto& [D, d] : report.pairs)
      v.values.push_back(report.odd ? coeff_C(k, D, d, opts) : coeff_B_reduced(k, D, d, opts));
    const BigInt& x = v.values[0];
    const BigInt& y = v.values[1];
    const BigInt& z = v.values[2];
    if (report.odd) {
      v.distinct = x != y && y != z && x != z;
      v.comparison_signs = {sgn(BigInt(x - y)), sgn(BigInt(y - z)), sgn(BigInt(x - z))};
      v.rows.push_back({"C(-3,-4) < C(-3,-7) < C(-3,-11)", true, x < y && y < z});
    } else {
      v.distinct = x != y && x != z;
      v.comparison_signs = {sgn(BigInt(x - y)), sgn(BigInt(x - z))};
      const BigInt twelve_k = pow(BigInt(12), k);
      const BigInt two_k = pow(BigInt(2), k);
      v.rows.push_back({"B(5,1)/(k-1) = k-4", true, x == BigInt(static_cast<long>(k) - 4)});
      v.rows.push_back({"B(5,13)/(k-1) = -50 for k = 2", k == 2, y == -50});
      v.rows.push_back({"B(5,13)/(k-1) <= -190 for 4 <= k <= 34", k >= 4 && k <= 34, y <= -190});
      v.rows.push_back({"B(5,13)/(k-1) > 12^k for k >= 35", k >= 35, y > twelve_k});
      v.rows.push_back({"B(5,8)/(k-1) <= -22 for 2 <= k <= 6", k <= 6, z <= -22});
      v.rows.push_back({"B(5,8)/(k-1) > 2^k for k >= 7", k >= 7, z > two_k});
    }
    report.variants.push_back(std::move(v));
  }
  report.distinctness = report.variants.front().distinct;
  report.alarm = !report.vacuous && !report.distinctness;
  return report;
}

}  // namespace heckecert
