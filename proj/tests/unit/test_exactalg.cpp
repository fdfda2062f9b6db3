#include "heckecert/exactalg.hpp"

#include "heckecert/modarith.hpp"
#include "support.hpp"

using namespace heckecert;

namespace {

IntMatrix random_matrix(std::size_t n, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(testsupport::rng());
  return m;
}

}  // namespace

TEST(Charpoly, CrtMatchesFaddeevLeverrierOn200RandomMatrices) {
  std::uniform_int_distribution<int> size(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(testsupport::rng()));
    const long range = trial % 3 == 0 ? 3 : (trial % 3 == 1 ? 1000 : 1000000000L);
    IntMatrix m = random_matrix(n, range);
    if (trial % 10 == 0) m(0, 0) = BigInt("123456789012345678901234567890");  // beyond 64 bits
    const IntPoly f = charpoly(m);
    EXPECT_EQ(testsupport::coeffs(f), oracle::faddeev_leverrier(testsupport::to_oracle(m))) << "trial " << trial;
  }
}

TEST(Charpoly, EdgeCases) {
  EXPECT_EQ(charpoly(IntMatrix(0, 0)).to_string(), "1");
  EXPECT_EQ(charpoly(IntMatrix{{0, 0}, {0, 0}}).to_string(), "X^2");
  EXPECT_EQ(charpoly(IntMatrix{{0, 1}, {0, 0}}).to_string(), "X^2");  // nilpotent, Hessenberg pivot missing
  EXPECT_EQ(charpoly(IntMatrix{{2, 1}, {1, 2}}).to_string(), "X^2 - 4*X + 3");
  EXPECT_ERROR_KIND(charpoly(IntMatrix(2, 3)), ErrorKind::InvalidInput);
}

TEST(Charpoly, TraceRecordsPrimes) {
  CharpolyTrace tr;
  charpoly(IntMatrix{{1, 2}, {3, 4}}, &tr);
  EXPECT_EQ(tr.primes_used, 1u);
  EXPECT_TRUE(modarith::is_prime(tr.check_prime));
}

TEST(Charpoly, ModularImageMatchesReduction) {
  const IntMatrix m = random_matrix(6, 100000);
  const IntPoly f = charpoly(m);
  for (std::uint64_t p : {2ULL, 3ULL, 101ULL, (1ULL << 61) - 1}) {
    const auto r = charpoly_mod(m, p);
    for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r[i], mod_u64(f.coeff(i), p)) << "p=" << p;
  }
}

TEST(Discriminant, KnownValues) {
  EXPECT_EQ(discriminant(IntPoly{-1080, 0, 1}), 4320);                     // X^2 - 1080
  EXPECT_EQ(discriminant(IntPoly{-20468736, -1080, 1}), BigInt(83041344) * 1);  // T_{2,24}
  EXPECT_EQ(discriminant(IntPoly{1, 1, 0, 1}), -31);                       // X^3 + X + 1
  EXPECT_EQ(discriminant(IntPoly{2, 0, 3}), -24);                          // 3X^2 + 2: b^2 - 4ac
  EXPECT_ERROR_KIND(discriminant(IntPoly{1, 2, 1}), ErrorKind::NotSquarefree);
  EXPECT_ERROR_KIND(discriminant(IntPoly{5}), ErrorKind::InvalidInput);
}

TEST(Discriminant, ProductOfRootDifferences) {
  // prod (r_i - r_j)^2 for roots 1, 2, 4, -3
  const IntPoly f = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{-4, 1} * IntPoly{3, 1};
  const long roots[] = {1, 2, 4, -3};
  BigInt expect = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) expect *= BigInt((roots[i] - roots[j]) * (roots[i] - roots[j]));
  EXPECT_EQ(discriminant(f), expect);
}

TEST(Resultant, AgreesWithRootProduct) {
  // Res(f, g) = prod g(r) over roots r of monic f
  const IntPoly f = IntPoly{-1, 1} * IntPoly{-5, 1};
  const IntPoly g{7, 0, 1};
  EXPECT_EQ(resultant(f, g), BigInt(8 * 32));
}

TEST(Determinant, BareissMatchesLeibnizOn3x3) {
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(3, 50);
    const BigInt leibniz = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    EXPECT_EQ(determinant(m), leibniz);
  }
}

TEST(PerfectSquare, Basics) {
  EXPECT_TRUE(is_perfect_square(0));
  EXPECT_TRUE(is_perfect_square(BigInt("152415787532388367501905199875019052100")));
  EXPECT_FALSE(is_perfect_square(83041344));
  EXPECT_FALSE(is_perfect_square(-4));
}
