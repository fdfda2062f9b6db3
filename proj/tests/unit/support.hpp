#pragma once

#include <gtest/gtest.h>

#include <random>

#include "heckecert/error.hpp"
#include "heckecert/matrix.hpp"
#include "heckecert/poly.hpp"
#include "oracles.hpp"

#define EXPECT_ERROR_KIND(stmt, expected_kind)                                   \
  do {                                                                           \
    try {                                                                        \
      (void)(stmt);                                                              \
      ADD_FAILURE() << "expected " << heckecert::to_string(expected_kind);      \
    } catch (const heckecert::Error& e) {                                        \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                            \
    }                                                                            \
  } while (0)

namespace testsupport {

inline oracle::ZMat to_oracle(const heckecert::IntMatrix& m) {
  oracle::ZMat out(m.rows(), std::vector<oracle::Z>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline std::vector<oracle::Z> coeffs(const heckecert::IntPoly& f) {
  return {f.coeffs().begin(), f.coeffs().end()};
}

// Fixed seed: every run sees the same "random" cases.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

}  // namespace testsupport
