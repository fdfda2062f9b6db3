#include "heckecert/lperiods.hpp"

#include <cstdlib>
#include <numeric>

#include "support.hpp"

using namespace heckecert;

namespace {

const long kCorpus[] = {5, 12, 13, 17, 21, 24, 33, 40, 65};

long dim_cusp(unsigned weight) {
  if (weight % 2 || weight < 12 || weight == 14) return 0;
  return weight % 12 == 2 ? weight / 12 - 1 : weight / 12;
}

bool fundamental(long d) { return is_fundamental_discriminant(BigInt(d)) || d == 1; }

// chi_d from a brute-force search for a coprime represented value.
int oracle_chi(long d, const oracle::Form3& q) {
  const auto [a, b, c] = q;
  for (long r = 0; r <= 30; ++r)
    for (long x = -r; x <= r; ++x)
      for (long y = -r; y <= r; ++y) {
        if (std::max(std::abs(x), std::abs(y)) != r || std::gcd(x, y) != 1) continue;
        const long v = a * x * x + b * x * y + c * y * y;
        if (v != 0 && std::gcd(v, d) == 1) return oracle::kronecker(d, v);
      }
  ADD_FAILURE() << "no coprime value";
  return 0;
}

std::vector<oracle::Form3> tuples(const std::vector<Form>& forms) {
  std::vector<oracle::Form3> out;
  for (const auto& q : forms) out.emplace_back(q.a.get_si(), q.b.get_si(), q.c.get_si());
  return out;
}

BigInt ipow(long b, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(b).get_mpz_t(), e);
  return r;
}

BigInt oracle_C(unsigned k, long D, long d, const std::vector<oracle::Form3>& forms) {
  BigInt s = 0;
  for (const auto& q : forms) s += oracle_chi(d, q) * ipow(std::get<2>(q), k - 1);
  return s;
}

// B / (k-1), written with 2S to stay integral for odd (k-2)/2 multiples.
BigInt oracle_B_reduced(unsigned k, long d, const std::vector<oracle::Form3>& forms) {
  BigInt twice = 0;
  for (const auto& [a, b, c] : forms) {
    const BigInt inner = 2 * BigInt(a) * c + BigInt(k - 2) * b * b;
    twice += oracle_chi(d, {a, b, c}) * (k >= 3 ? ipow(c, k - 3) * inner : BigInt(2 * a));
  }
  return twice / 2;
}

IntPoly oracle_P(unsigned k, long D, long d) {
  IntPoly sum;
  for (const auto& q : oracle::straddling(D * d)) {
    const auto [a, b, c] = q;
    IntPoly term{1};
    for (unsigned i = 0; i + 1 < k; ++i) term = term * IntPoly{c, b, a};
    sum += BigInt(oracle_chi(d, q)) * term;
  }
  return sum;
}

Rational oracle_H(unsigned m, long n_abs, int sign) {
  if (n_abs == 1) return -oracle::bernoulli(m) / static_cast<long>(m);  // zeta(1 - m)
  return oracle::dirichlet_L_negative(m, sign * n_abs);
}

struct Triple {
  unsigned k;
  long D, d;
};

// Every (k, D, d) with D, d fundamental, sign (-1)^k and D*d in the corpus.
std::vector<Triple> admissible(unsigned kmin, unsigned kmax) {
  std::vector<Triple> out;
  for (unsigned k = kmin; k <= kmax; ++k)
    for (long delta : kCorpus)
      for (long D = 1; D <= delta; ++D) {
        if (delta % D) continue;
        const long s = k % 2 ? -1 : 1;
        if (fundamental(s * D) && fundamental(s * (delta / D))) out.push_back({k, s * D, s * (delta / D)});
      }
  return out;
}

}  // namespace

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  for (unsigned n = 0; n <= 60; ++n) EXPECT_EQ(bernoulli(n), oracle::bernoulli(n)) << n;
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
}

TEST(Bernoulli, PolynomialAndZeta) {
  for (unsigned m = 0; m <= 12; ++m)
    for (const Rational x : {Rational(0), Rational(1, 3), Rational(5, 7), Rational(2)})
      EXPECT_EQ(bernoulli_polynomial(m, x), oracle::bernoulli_poly(m, x));
  EXPECT_EQ(zeta_neg(1), Rational(-1, 12));
  EXPECT_EQ(zeta_neg(6), Rational(691, 32760));
  for (unsigned k = 1; k <= 20; ++k) EXPECT_EQ(zeta_neg(k), -oracle::bernoulli(2 * k) / Rational(2 * k));
}

TEST(CohenH, MatchesBernoulliPolynomialSum) {
  EXPECT_EQ(cohen_H(2, 5, 1), Rational(-2, 5));
  EXPECT_EQ(cohen_H(4, 5, 1), Rational(2));
  for (long n : {3L, 4L, 7L, 8L, 11L, 15L, 20L})
    for (unsigned m = 1; m <= 9; m += 2) EXPECT_EQ(cohen_H(m, n, -1), oracle_H(m, n, -1)) << m << " " << n;
  for (long n : {1L, 5L, 8L, 12L, 13L, 17L, 21L, 24L, 33L, 40L, 65L})
    for (unsigned m = 2; m <= 12; m += 2) EXPECT_EQ(cohen_H(m, n, 1), oracle_H(m, n, 1)) << m << " " << n;
  EXPECT_ERROR_KIND(cohen_H(2, 6, 1), ErrorKind::Unsupported);
}

TEST(PPoly, Examples) {
  EXPECT_EQ(P_poly(2, 5, 1), (IntPoly{2, 0, -2}));
  EXPECT_EQ(P_poly(4, 5, 1), (IntPoly{2, 0, 0, 0, 0, 0, -2}));
}

TEST(PPoly, MatchesOracleSum) {
  for (const auto& t : admissible(2, 8)) EXPECT_EQ(P_poly(t.k, t.D, t.d), oracle_P(t.k, t.D, t.d)) << t.k << " " << t.D << " " << t.d;
}

TEST(PPoly, EvenAndAntiPalindromic) {
  // [a,b,c] -> [a,-b,c] makes P even; [a,b,c] -> [-c,b,-a] gives P(X) = -X^{2k-2} P(-1/X).
  for (const auto& t : admissible(2, 9)) {
    const IntPoly p = P_poly(t.k, t.D, t.d);
    const std::size_t top = 2 * t.k - 2;
    for (std::size_t i = 0; i <= top; ++i) {
      if (i % 2) EXPECT_EQ(p.coeff(i), 0);
      EXPECT_EQ(p.coeff(top - i), -p.coeff(i)) << t.k << " " << t.D << " " << t.d << " i=" << i;
    }
  }
}

TEST(RPlus, VanishesAtEveryVanishingWeight) {
  std::size_t count = 0;
  for (const auto& t : admissible(2, 7)) {
    if (dim_cusp(2 * t.k) != 0) continue;
    const auto rep = rplus_closed(t.k, t.D, t.d);
    EXPECT_TRUE(rep.vanishing_weight);
    EXPECT_TRUE(rep.rplus.is_zero()) << t.k << " " << t.D << " " << t.d;
    ++count;
  }
  EXPECT_EQ(count, 68u);
}

TEST(RPlus, DecompositionAgainstOracle) {
  for (const auto& t : admissible(2, 10)) {
    const auto rep = rplus_closed(t.k, t.D, t.d);
    const int sD = t.D < 0 ? -1 : 1;
    const Rational h = oracle_H(t.k, std::abs(t.D), sD) * oracle_H(t.k, std::abs(t.d), sD) /
                       (2 * (-oracle::bernoulli(2 * t.k) / Rational(2 * t.k)));
    EXPECT_EQ(rep.H_product_term, h);
    EXPECT_EQ(rep.P, oracle_P(t.k, t.D, t.d));
    const std::size_t top = 2 * t.k - 2;
    for (std::size_t i = 0; i <= top; ++i) {
      Rational expect = Rational(rep.P.coeff(i));
      if (i == 0) expect -= h;
      if (i == top) expect += h;
      EXPECT_EQ(rep.rplus.coeff(i), expect);
    }
  }
}

TEST(RPlus, WeightTwelveExample) {
  const auto rep = rplus_closed(6, 5, 1);
  EXPECT_FALSE(rep.vanishing_weight);
  const std::vector<Rational> expect{Rational(-360, 691), 0, 10, 0, -30, 0, 30, 0, -10, 0, Rational(360, 691)};
  ASSERT_EQ(rep.rplus.degree(), 10);
  for (std::size_t i = 0; i <= 10; ++i) EXPECT_EQ(rep.rplus.coeff(i), expect[i]) << i;
}

TEST(PeriodInputs, Preconditions) {
  EXPECT_ERROR_KIND(check_period_inputs(2, -3, -4), ErrorKind::InvalidInput);  // wrong sign for even k
  EXPECT_ERROR_KIND(check_period_inputs(3, -3, 5), ErrorKind::InvalidInput);
  EXPECT_ERROR_KIND(check_period_inputs(2, 5, 6), ErrorKind::InvalidInput);
  EXPECT_NO_THROW(check_period_inputs(2, 5, 13));
  EXPECT_ERROR_KIND(coeff_B(3, -3, -4), ErrorKind::InvalidInput);
}

TEST(Coefficients, CMatchesOracleComputedForms) {
  for (const auto& t : admissible(2, 12)) {
    const auto forms = oracle::straddling(t.D * t.d);
    EXPECT_EQ(coeff_C(t.k, t.D, t.d), oracle_C(t.k, t.D, t.d, forms)) << t.k << " " << t.D << " " << t.d;
    if (t.k % 2 == 0)
      EXPECT_EQ(coeff_B_reduced(t.k, t.D, t.d), oracle_B_reduced(t.k, t.d, forms)) << t.k << " " << t.D << " " << t.d;
  }
}

TEST(Coefficients, ComputedFormValues) {
  EXPECT_EQ(coeff_C(5, -3, -4), -110);
  EXPECT_EQ(coeff_C(3, -3, -7), -64);
  EXPECT_EQ(coeff_B(2, 5, 13), -48);
  EXPECT_EQ(coeff_B(2, 5, 8), -24);
  EXPECT_EQ(coeff_B_reduced(4, 5, 8), 0);
  EXPECT_EQ(coeff_B(4, 5, 8), 3 * coeff_B_reduced(4, 5, 8));
}

TEST(Coefficients, PublishedListValues) {
  const CoeffOptions pub{FormSource::Published, CharMode::Genus};
  EXPECT_EQ(coeff_C(5, -3, -4, pub), -30);
  EXPECT_EQ(coeff_C(3, -3, -7, pub), -46);
  EXPECT_EQ(coeff_B(2, 5, 13, pub), -50);
  EXPECT_EQ(coeff_B(2, 5, 8, pub), -16);
  EXPECT_EQ(coeff_B_reduced(4, 5, 8, pub), -150);
  for (const auto& [k, D, d] : std::vector<Triple>{{5, -3, -4}, {3, -3, -7}, {2, 5, 13}, {4, 5, 8}}) {
    const auto forms = tuples(*published_straddling_list(D * d));
    if (k % 2) EXPECT_EQ(coeff_C(k, D, d, pub), oracle_C(k, D, d, forms));
    else EXPECT_EQ(coeff_B_reduced(k, D, d, pub), oracle_B_reduced(k, d, forms));
  }
}

TEST(Coefficients, TrivialCharacterVariant) {
  const CoeffOptions triv{FormSource::Computed, CharMode::Trivial};
  for (const auto& wf : weighted_forms(-3, -4, triv)) EXPECT_EQ(wf.chi, 1);
  BigInt s = 0;
  for (const auto& [a, b, c] : oracle::straddling(12)) s += ipow(c, 4);
  EXPECT_EQ(coeff_C(5, -3, -4, triv), s);
}

TEST(Contradiction, ReportShape) {
  const auto odd = contradiction_report(5);
  EXPECT_TRUE(odd.odd);
  EXPECT_TRUE(odd.vacuous);
  ASSERT_EQ(odd.variants.size(), 4u);
  EXPECT_EQ(odd.variants[0].values, (std::vector<BigInt>{-110, coeff_C(5, -3, -7), coeff_C(5, -3, -11)}));
  EXPECT_FALSE(odd.alarm);

  const auto even = contradiction_report(4);
  EXPECT_FALSE(even.odd);
  EXPECT_FALSE(even.distinctness);  // all three reduced B vanish at k = 4
  EXPECT_FALSE(even.alarm);          // ...but S_8 = 0

  for (unsigned k = 2; k <= 40; ++k) {
    const auto r = contradiction_report(k);
    EXPECT_EQ(r.vacuous, dim_cusp(2 * k) == 0) << k;
    EXPECT_EQ(r.alarm, !r.vacuous && !r.distinctness) << k;
    EXPECT_FALSE(r.alarm) << k;
  }
}
