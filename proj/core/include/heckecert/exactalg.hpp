#pragma once

#include <cstdint>
#include <vector>

#include "heckecert/bigint.hpp"
#include "heckecert/matrix.hpp"
#include "heckecert/poly.hpp"

namespace heckecert {

/// Characteristic polynomial det(X*I - M) over F_p by Hessenberg reduction,
/// lowest degree first (length dim + 1, monic).
std::vector<std::uint64_t> charpoly_mod(const IntMatrix& m, std::uint64_t p);

/// max_i C(d, i) * (sqrt(d) * max|m_jk|)^i rounded up: bounds every coefficient
/// of the characteristic polynomial (Hadamard on the principal minors).
BigInt charpoly_coefficient_bound(const IntMatrix& m);

struct CharpolyTrace {
  std::size_t primes_used = 0;    // moduli combined by CRT
  std::uint64_t check_prime = 0;  // the extra verification modulus
  std::size_t bound_bits = 0;
};

/// Exact characteristic polynomial of a square integer matrix via multimodular
/// CRT with a proven bound and one verification prime. The 0x0 matrix yields 1.
IntPoly charpoly(const IntMatrix& m, CharpolyTrace* trace = nullptr);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& m);

/// Resultant via the Sylvester matrix determinant.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f). Throws NotSquarefree when f
/// shares a factor with f' (the resultant vanishes), InvalidInput when deg f < 1.
BigInt discriminant(const IntPoly& f);

/// Exact square test; negative numbers are never squares.
bool is_perfect_square(const BigInt& n);

}  // namespace heckecert
