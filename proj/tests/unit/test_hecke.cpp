#include "heckecert/hecke.hpp"

#include <filesystem>

#include "heckecert/basis_cache.hpp"
#include "heckecert/exactalg.hpp"
#include "heckecert/qseries.hpp"
#include "support.hpp"

using namespace heckecert;

TEST(Hecke, DeltaIsAnEigenform) {
  const auto tau = oracle::delta(400);
  for (unsigned long n = 1; n <= 20; ++n) {
    const HeckeMatrix m = hecke_matrix(n, 12);
    ASSERT_EQ(m.dim(), 1u);
    EXPECT_EQ(m.entries(0, 0), tau[n]) << "n=" << n;
  }
}

TEST(Hecke, ActionMatchesDefinitionOracle) {
  const QSeries d = delta(200);
  const auto expect = oracle::hecke(oracle::delta(200), 7, 12, 25);
  const QSeries got = hecke_action(d, 7, 12, 25);
  for (std::size_t m = 0; m <= 25; ++m) EXPECT_EQ(got[m], expect[m]);
  EXPECT_ERROR_KIND(hecke_action(d, 7, 12, 40), ErrorKind::InsufficientPrecision);
}

TEST(Hecke, CharpolyAgreesWithMonomialBasisOracle) {
  // Same operator, different basis and different charpoly algorithm.
  for (int w : {24, 36, 48, 60})
    for (unsigned long n : {2UL, 3UL, 5UL}) {
      const IntPoly f = charpoly(hecke_matrix(n, w).entries);
      EXPECT_EQ(testsupport::coeffs(f), oracle::faddeev_leverrier(oracle::hecke_matrix(n, w))) << "w=" << w << " n=" << n;
    }
}

class HeckeProperties : public ::testing::TestWithParam<int> {};

TEST_P(HeckeProperties, CommuteMultiplyRecurse) {
  const int w = GetParam();
  if (dim_cusp(w) == 0) GTEST_SKIP() << "S_" << w << " = 0";
  auto T = [&](unsigned long n) { return hecke_matrix(n, w).entries; };
  EXPECT_EQ(T(2) * T(3), T(3) * T(2));
  EXPECT_EQ(T(5) * T(3), T(3) * T(5));
  EXPECT_EQ(T(6), T(2) * T(3));
  EXPECT_EQ(T(10), T(2) * T(5));
  EXPECT_EQ(T(15), T(3) * T(5));
  const IntMatrix id = IntMatrix::identity(dim_cusp(w));
  EXPECT_EQ(T(1), id);
  for (unsigned long p : {2UL, 3UL}) {
    const BigInt pw = pow(BigInt(p), static_cast<unsigned long>(w - 1));
    EXPECT_EQ(T(p * p), T(p) * T(p) - pw * id) << "p=" << p;
    EXPECT_EQ(T(p * p * p), T(p) * T(p * p) - pw * T(p)) << "p=" << p;
  }
}

INSTANTIATE_TEST_SUITE_P(WeightsUpTo60, HeckeProperties, ::testing::Range(12, 62, 2));

TEST(Hecke, ScalarDetection) {
  EXPECT_EQ(is_scalar(hecke_matrix(1, 48)), std::optional<BigInt>(1));
  EXPECT_FALSE(is_scalar(hecke_matrix(2, 48)).has_value());
  EXPECT_EQ(is_scalar(hecke_matrix(2, 12)), std::optional<BigInt>(-24));
}

TEST(Hecke, PrecisionRule) { EXPECT_EQ(hecke_precision(13, 500), 13u * 41 + 1); }

TEST(BasisCache, SerializationRoundTrip) {
  const MillerBasis b = compute_basis(36, 20);
  const std::string text = serialize_basis(b);
  const MillerBasis back = parse_basis(text);
  EXPECT_EQ(back.weight, 36);
  EXPECT_EQ(back.prec, 20u);
  EXPECT_EQ(serialize_basis(back), text);
}

TEST(BasisCache, ChecksumRejectsCorruption) {
  std::string text = serialize_basis(compute_basis(24, 10));
  // Bump one digit of the first coefficient row; the header stays intact.
  const auto row = text.find('\n', text.find("dim"));
  const auto pos = text.find_first_of("12345678", row);
  ASSERT_NE(pos, std::string::npos) << text;
  ++text[pos];
  EXPECT_ERROR_KIND(parse_basis(text), ErrorKind::Io);
}

TEST(BasisCache, DiskCacheServesLargerPrecision) {
  const auto dir = std::filesystem::temp_directory_path() / "heckecert-test-cache";
  std::filesystem::remove_all(dir);
  {
    BasisCache cache(dir);
    const auto b = cache.get(48, 40);
    EXPECT_EQ(b->prec, 40u);
  }
  EXPECT_TRUE(std::filesystem::exists(dir / BasisCache::file_name(48, 40)));
  BasisCache fresh(dir);
  const auto again = fresh.get(48, 30);
  EXPECT_GE(again->prec, 30u);
  EXPECT_EQ(again->rows[0][30], compute_basis(48, 30).rows[0][30]);
  // The hecke matrix is the same whichever cache served it.
  EXPECT_EQ(hecke_matrix(5, 48, fresh).entries, hecke_matrix(5, 48).entries);
  std::filesystem::remove_all(dir);
}
