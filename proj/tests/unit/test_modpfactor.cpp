#include "heckecert/modpfactor.hpp"

#include "support.hpp"

using namespace heckecert;

namespace {

ModPoly mp(std::uint64_t p, std::vector<std::uint64_t> c) { return ModPoly(p, std::move(c)); }

}  // namespace

TEST(ReduceMod, Examples) {
  EXPECT_EQ(reduce_mod(IntPoly{24, 1}, 5), mp(5, {4, 1}));
  EXPECT_EQ(reduce_mod(IntPoly{-20468736, -1080, 1}, 7), mp(7, {6, 5, 1}));
  EXPECT_ERROR_KIND(reduce_mod(IntPoly{1, 2}, 2), ErrorKind::BadPrime);
}

TEST(DegreePattern, Examples) {
  EXPECT_EQ(degree_pattern(mp(5, {1, 0, 1})).degrees, (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(degree_pattern(mp(3, {1, 0, 1})).degrees, (std::vector<unsigned>{2}));
  EXPECT_EQ(degree_pattern(mp(5, {0, 4, 0, 1})).degrees, (std::vector<unsigned>{1, 1, 1}));
  const FactorPattern sq = degree_pattern(mp(7, {1, 2, 1}));
  EXPECT_FALSE(sq.squarefree);
  EXPECT_TRUE(sq.degrees.empty());
}

TEST(DegreePattern, DdfMatchesBruteForceForDegreeUpTo6AndPUpTo13) {
  std::uniform_int_distribution<int> deg(1, 6);
  std::size_t squarefree_seen = 0, repeated_seen = 0;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    for (int trial = 0; trial < 400; ++trial) {
      const int n = deg(testsupport::rng());
      std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1);
      for (auto& x : c) x = coef(testsupport::rng());
      c.back() = 1;
      oracle::FpPoly o(c.begin(), c.end());
      const auto expect = oracle::brute_force_pattern(o, static_cast<std::int64_t>(p));
      const FactorPattern got = degree_pattern(mp(p, c));
      if (expect.empty()) {
        EXPECT_FALSE(got.squarefree) << "p=" << p << " " << mp(p, c).to_string();
        ++repeated_seen;
      } else {
        EXPECT_TRUE(got.squarefree) << "p=" << p << " " << mp(p, c).to_string();
        EXPECT_EQ(got.degrees, expect) << "p=" << p << " " << mp(p, c).to_string();
        ++squarefree_seen;
      }
    }
  }
  EXPECT_GT(squarefree_seen, 1000u);
  EXPECT_GT(repeated_seen, 50u);
}

TEST(ModPolyArith, GcdAndDivision) {
  // (X+1)(X+2) and (X+1)(X+3) mod 7
  const ModPoly a = modpoly::mul(mp(7, {1, 1}), mp(7, {2, 1}));
  const ModPoly b = modpoly::mul(mp(7, {1, 1}), mp(7, {3, 1}));
  EXPECT_EQ(modpoly::gcd(a, b), mp(7, {1, 1}));
  EXPECT_EQ(modpoly::divide_exact(a, mp(7, {1, 1})), mp(7, {2, 1}));
  EXPECT_TRUE(modpoly::rem(a, mp(7, {2, 1})).is_zero());
}

TEST(ModPolyArith, FrobeniusPowmod) {
  // X^p = X modulo any polynomial that splits into distinct linear factors over F_p.
  const ModPoly m = mp(13, {0, 12, 0, 1});  // X^3 - X
  EXPECT_EQ(modpoly::powmod(mp(13, {0, 1}), 13, m), mp(13, {0, 1}));
}

TEST(ModPolyArith, LargePrimeMultiplicationDoesNotOverflow) {
  const std::uint64_t p = (1ULL << 61) - 1;
  const ModPoly a = mp(p, {p - 1, p - 1, 1});
  const ModPoly sq = modpoly::mul(a, a);
  // (X^2 - X - 1)^2 = X^4 - 2X^3 - X^2 + 2X + 1
  EXPECT_EQ(sq, mp(p, {1, 2, p - 1, p - 2, 1}));
}
